// Copyright 2026 The Framekit Authors
//
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

#ifndef FRAMEKIT_CLI_HPP
#define FRAMEKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace framekit {

// Executes one command line (argv without the program name). Artifacts go
// to `out`, diagnostics to `err`. Exit codes: 0 success, 1 validation or
// analysis failure, 2 usage error, 3 reference cycle.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace framekit

#endif  // FRAMEKIT_CLI_HPP
