// Copyright 2026 The typeb Authors
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

#pragma once

#include <string>

#include "typeb/moments.hpp"

namespace typeb {

// Problem file schema:
//   {"dimension": d,
//    "factors": [{"x_left": ["1/2", ...], "x_right": [...],
//                 "T_left": [[...], ...], "T_right": [[...], ...],
//                 "lam_left": "0", "lam_right": "0"}, ...]}
// factors[0] is index 1, the rightmost operator. T_* and lam_* default to zero.
// Rationals may be strings or JSON integers. Throws std::invalid_argument.
MomentProblem parse_problem(const std::string& json_text);
MomentProblem load_problem(const std::string& path);
std::string problem_to_json(const MomentProblem& problem);

}  // namespace typeb
