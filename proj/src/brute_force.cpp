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

#include "l0cover/brute_force.hpp"

#include <string>
#include <vector>

#include "l0cover/covering.hpp"
#include "l0cover/lp.hpp"

namespace l0cover {

Solution brute_force_solve(const Instance& inst, const Tolerances& tol) {
  const Index m = inst.cols();
  if (m > kBruteForceMaxColumns) {
    throw ContractViolation("brute force refused: m = " + std::to_string(m) + " exceeds " +
                            std::to_string(kBruteForceMaxColumns));
  }
  ResidualOracle oracle(inst, tol);
  std::int64_t visited = 0;
  for (Index size = 0; size <= m; ++size) {
    // Lexicographic combinations of `size` columns.
    std::vector<Index> pick(static_cast<std::size_t>(size));
    for (Index t = 0; t < size; ++t) pick[static_cast<std::size_t>(t)] = t;
    for (;;) {
      ++visited;
      const Support s(pick);
      if (!oracle.forbidden(s)) {
        Solution sol = recover_x(oracle, s);
        sol.stats.lp_calls = oracle.lp_calls();
        sol.stats.nodes = visited;
        sol.stats.lower_bound = sol.objective;
        return sol;
      }
      Index t = size - 1;
      while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - size + t) --t;
      if (t < 0) break;
      ++pick[static_cast<std::size_t>(t)];
      for (Index u = t + 1; u < size; ++u) {
        pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
      }
    }
  }
  throw ProblemInfeasible("no support meets the threshold");
}

}  // namespace l0cover
