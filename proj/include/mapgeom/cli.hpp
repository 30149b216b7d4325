// Copyright 2026 The mapgeom Authors
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

#ifndef MAPGEOM_CLI_HPP_
#define MAPGEOM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mapgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitSyntax = 2;

// Environment variable holding the maximum number of embeddings an
// enumeration may visit.
inline constexpr const char* kScaleBoundVariable = "MAPGEOM_MAX_EMBEDDINGS";

// Runs the command line args (without the program name). Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mapgeom::cli

#endif  // MAPGEOM_CLI_HPP_
