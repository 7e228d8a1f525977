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

#ifndef LINGB_COMMANDS_HPP
#define LINGB_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lingb {

/// Process exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 1,     // usage or parse error
    kExitSemantic = 2,  // well-formed but invalid input
    kExitVerify = 3,    // oracle verification failed
};

/// Runs one subcommand; args exclude the program name.
///
///   gb <file> <name>... [--certificates]
///   reduce <file> <f> mod <name>...
///   member <file> <f> in <name>...
///   compose <file> <h> <f>
///   eval <file> <f> <alpha>
///   oracle <file> <name>... --degree-bound D [--samples N]
///   canon <file>
///
/// --weights w1,w2,... and --tie first|last override the file's order line.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lingb

#endif
