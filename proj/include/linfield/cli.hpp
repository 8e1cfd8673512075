/*
   Copyright 2026 the linfield authors

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

#ifndef LINFIELD_CLI_HPP
#define LINFIELD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace linfield {

/// Runs the linfield command line on the given arguments (without argv[0]).
/// Expressions come from positional arguments, or from stdin lines when no
/// positionals are given. Returns 0 on success or a true verdict, 1 on a
/// false verdict, 2 on any error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace linfield

#endif  // LINFIELD_CLI_HPP
