/*
   Copyright 2026 The lingb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lingb/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "lingb/groebner.hpp"
#include "lingb/oracle.hpp"
#include "lingb/problem.hpp"

namespace lingb {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Problem load_problem(const std::string& path, const std::string& weights, const std::string& tie) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Problem problem = parse_problem(buf.str());

    if (!weights.empty() || !tie.empty()) {
        auto w = weights.empty() ? problem.order.weights() : parse_weights(weights);
        const Tie t = tie.empty() ? problem.order.tie() : parse_tie(tie);
        problem.order = TOPOrder(std::move(w), t);
        for (const auto& b : problem.bindings) {
            const auto* v = std::get_if<ModuleVector>(&b.value);
            if (v && v->ell() != problem.ell())
                throw SemanticError("--weights has " + std::to_string(problem.ell()) + " entries, vector has " +
                                        std::to_string(v->ell()),
                                    b.name, Errc::ShapeMismatch);
        }
    }
    return problem;
}

std::vector<ModuleVector> lookup_vectors(const Problem& problem, const std::vector<std::string>& names) {
    std::vector<ModuleVector> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(problem.vector(n));
    return out;
}

// Splits "<f> <keyword> <name>..." as used by reduce and member.
std::pair<std::string, std::vector<std::string>> split_keyword(const std::vector<std::string>& rest,
                                                                const std::string& keyword) {
    if (rest.size() < 3 || rest[1] != keyword)
        throw UsageError("expected '<f> " + keyword + " <name>...'");
    return {rest[0], {rest.begin() + 2, rest.end()}};
}

// Coefficients of f over the generators given quotients over a basis.
std::vector<LinearizedPoly> pull_back(const std::vector<LinearizedPoly>& quotients, const GroebnerBasis& basis,
                                      const FieldParams& field) {
    std::vector<LinearizedPoly> out(basis.generators.size(), LinearizedPoly::zero(field));
    for (std::size_t k = 0; k < quotients.size(); ++k)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += compose(quotients[k], basis.certificates[k][j]);
    return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases for modules over q-linearized polynomials", "lingb"};
    app.require_subcommand(1, 1);
    std::string weights, tie;
    app.add_option("--weights", weights, "comma-separated position weights (overrides the order line)");
    app.add_option("--tie", tie, "first|last: which position wins weighted-degree ties")
        ->check(CLI::IsMember({"first", "last"}));

    std::string file;
    std::vector<std::string> names;
    std::vector<std::string> rest;
    std::string h_name, f_name, alpha;
    unsigned degree_bound = 0;
    std::size_t samples = 100;
    bool certificates = false;

    auto* gb = app.add_subcommand("gb", "minimal Groebner basis of the named generators");
    gb->add_option("file", file)->required();
    gb->add_option("names", names)->required();
    gb->add_flag("--certificates", certificates, "print each element's expression over the generators");

    auto* reduce = app.add_subcommand("reduce", "reduce <f> modulo the named vectors");
    reduce->add_option("file", file)->required();
    reduce->add_option("args", rest, "<f> mod <name>...")->required();

    auto* member = app.add_subcommand("member", "decide whether <f> lies in the module of the named generators");
    member->add_option("file", file)->required();
    member->add_option("args", rest, "<f> in <name>...")->required();

    auto* compose_cmd = app.add_subcommand("compose", "left composition h o f");
    compose_cmd->add_option("file", file)->required();
    compose_cmd->add_option("outer", h_name, "linearized polynomial applied on the left")->required();
    compose_cmd->add_option("inner", f_name, "polynomial or vector")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a linearized polynomial at a field element");
    eval->add_option("file", file)->required();
    eval->add_option("f", f_name)->required();
    eval->add_option("alpha", alpha)->required();

    auto* oracle = app.add_subcommand("oracle", "check the computed basis against brute-force enumeration");
    oracle->add_option("file", file)->required();
    oracle->add_option("names", names)->required();
    oracle->add_option("--degree-bound", degree_bound, "max q-degree of enumerated coefficients")->required();
    oracle->add_option("--samples", samples, "random non-elements to test")->capture_default_str();

    auto* canon = app.add_subcommand("canon", "print the problem file in canonical form");
    canon->add_option("file", file)->required();

    for (auto* sub : {gb, reduce, member, compose_cmd, eval, oracle, canon}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const Problem problem = load_problem(file, weights, tie);
        const auto& order = problem.order;

        if (gb->parsed()) {
            const auto gens = lookup_vectors(problem, names);
            const auto basis = minimal_groebner_basis(gens, order);
            for (std::size_t k = 0; k < basis.elements.size(); ++k) {
                out << to_string(basis.elements[k]) << '\n';
                if (!certificates) continue;
                for (std::size_t j = 0; j < names.size(); ++j) {
                    const auto& c = basis.certificates[k][j];
                    if (!c.is_zero()) out << "  via " << names[j] << " = " << to_string(c) << '\n';
                }
            }
        } else if (reduce->parsed()) {
            const auto [f, reducer_names] = split_keyword(rest, "mod");
            const auto reducers = lookup_vectors(problem, reducer_names);
            const auto r = reduce_full(problem.vector(f), reducers, order);
            out << "remainder = " << to_string(r.remainder) << '\n';
            for (std::size_t i = 0; i < reducers.size(); ++i)
                out << "quotient " << reducer_names[i] << " = " << to_string(r.quotients[i]) << '\n';
        } else if (member->parsed()) {
            const auto [f, gen_names] = split_keyword(rest, "in");
            const auto basis = minimal_groebner_basis(lookup_vectors(problem, gen_names), order);
            const auto m = membership(problem.vector(f), basis);
            if (m.member) {
                out << "MEMBER\n";
                const auto coeffs = pull_back(m.reduction.quotients, basis, problem.field);
                for (std::size_t j = 0; j < gen_names.size(); ++j)
                    out << "quotient " << gen_names[j] << " = " << to_string(coeffs[j]) << '\n';
            } else {
                out << "NOT MEMBER\n";
                out << "remainder = " << to_string(m.reduction.remainder) << '\n';
            }
        } else if (compose_cmd->parsed()) {
            const auto h = problem.polynomial(h_name);
            const auto& target = problem.find(f_name).value;
            if (const auto* p = std::get_if<LinearizedPoly>(&target)) {
                out << to_string(compose(h, *p)) << '\n';
            } else {
                out << to_string(compose_left(h, std::get<ModuleVector>(target))) << '\n';
            }
        } else if (eval->parsed()) {
            const auto f = problem.polynomial(f_name);
            out << to_string(evaluate(f, parse_element(problem.field, alpha))) << '\n';
        } else if (oracle->parsed()) {
            const auto gens = lookup_vectors(problem, names);
            const auto basis = minimal_groebner_basis(gens, order);
            OracleOptions opts;
            opts.random_nonmembers = samples;
            const auto report = verify_groebner(basis, gens, degree_bound, order, opts);
            out << "basis elements: " << basis.elements.size() << '\n';
            for (const auto& b : basis.elements) out << to_string(b) << '\n';
            out << "enumerated: " << report.enumerated << " (degree bound " << degree_bound << ")\n";
            out << "random non-elements checked: " << report.nonmembers_checked << '\n';
            out << "unverifiable at bound: " << report.unverifiable << '\n';
            if (!report.pass) {
                out << "FAIL: " << report.failure << '\n';
                return kExitVerify;
            }
            out << "PASS\n";
        } else if (canon->parsed()) {
            out << print_problem(problem);
        }
    } catch (const UsageError& e) {
        err << "lingb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "lingb: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "lingb: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return kExitSemantic;
    }
    return kExitOk;
}

}  // namespace lingb
