// Copyright 2026 The qss-rec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSS_GOLDEN_H
#define QSS_GOLDEN_H

#include <string>
#include <vector>

#include "qss/qstate.h"

namespace qss {

/// Worked [[5,1,3]] reconstruction for J = {3,4,5}: the code, its two
/// codewords, and the reference intermediate and final states.
struct GoldenCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/// Comparison tolerance for golden amplitudes and fidelities.
constexpr double kGoldenTol = 1e-9;

/// Loads `code.txt`, `psi0.state` and `psi1.state` from `data_dir` and runs
/// every golden assertion. `tol` is the tolerance used to build the plan.
std::vector<GoldenCheck> run_golden(const std::string &data_dir, double tol = kDefaultTol);

std::string default_golden_dir();

}  // namespace qss

#endif
