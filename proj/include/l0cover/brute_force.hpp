// Copyright 2026 The l0cover Authors
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

#ifndef L0COVER_BRUTE_FORCE_HPP
#define L0COVER_BRUTE_FORCE_HPP

#include "l0cover/model.hpp"

namespace l0cover {

/// Largest m brute_force_solve accepts.
inline constexpr Index kBruteForceMaxColumns = 24;

/**
 * Enumerates supports by increasing size, lexicographically within a size,
 * and returns the first feasible one after recovering x. The answer is
 * therefore the lexicographically least minimum support. Throws
 * ContractViolation for m > 24 and ProblemInfeasible if nothing fits.
 */
Solution brute_force_solve(const Instance& inst, const Tolerances& tol = {});

}  // namespace l0cover

#endif  // L0COVER_BRUTE_FORCE_HPP
