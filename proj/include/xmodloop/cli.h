// Copyright 2026 The xmodloop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XMODLOOP_CLI_H_
#define XMODLOOP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace xmod {

// Runs one command line (args[0] is the program name). Returns 0 on success,
// 1 on validation failure, 2 on usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace xmod

#endif  // XMODLOOP_CLI_H_
