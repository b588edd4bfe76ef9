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

/**
 * @file heuristic.hpp
 * @brief Variable neighborhood search over supports with local-branching balls.
 *
 * The neighborhood of radius delta around an incumbent indicator b_hat is
 *
 *     sum_{b_hat_j = 0} b_j + sum_{b_hat_j = 1} (1 - b_j) <= delta,
 *
 * i.e. a Hamming ball. Each ball is searched with the covering branch and
 * bound plus lazy forbidden-support cuts, restricted to supports strictly
 * smaller than the incumbent.
 */

#ifndef L0COVER_HEURISTIC_HPP
#define L0COVER_HEURISTIC_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "l0cover/covering.hpp"
#include "l0cover/cuts.hpp"
#include "l0cover/lp.hpp"
#include "l0cover/model.hpp"

namespace l0cover {

struct NeighborhoodBudget {
  std::int64_t max_nodes = 20'000;
  std::int64_t max_lazy_iterations = 500;
  double time_limit_s = std::numeric_limits<double>::infinity();

  static NeighborhoodBudget unlimited();
};

struct VnsConfig {
  Tolerances tol;
  Index delta0 = 2;
  /// 0 means min(m, 10).
  Index delta_max = 0;
  Index delta_step = 1;
  NeighborhoodBudget neighborhood;
  double time_limit_s = std::numeric_limits<double>::infinity();
  bool family_cuts = true;
};

/// Radii actually used for m columns; throws ContractViolation if invalid.
struct VnsRadii {
  Index delta0;
  Index delta_max;
};
VnsRadii resolve_radii(const VnsConfig& cfg, Index m);

/// Hamming-ball constraint of radius delta around a 0/1 vector.
LinearConstraint local_branching_cut(const Vector& b_hat, Index delta);

/**
 * Greedy forward selection (largest residual drop, ties to the lower
 * index) until feasible, then one backward pass dropping redundant columns.
 */
Support initial_solution(ResidualOracle& oracle);
Support initial_solution(const Instance& inst, const Tolerances& tol = {});

struct NeighborhoodResult {
  std::optional<Support> improved;
  /// False when the budget ran out before the ball was settled.
  bool proven = true;
  std::int64_t nodes = 0;
};

/// Looks for a feasible support smaller than `incumbent` within distance delta.
NeighborhoodResult explore_neighborhood(ResidualOracle& oracle, CutPool& pool,
                                        const Support& incumbent, Index delta,
                                        const NeighborhoodBudget& budget = {},
                                        bool family_cuts = true);
NeighborhoodResult explore_neighborhood(const Instance& inst, const Support& incumbent,
                                        Index delta, const NeighborhoodBudget& budget = {},
                                        const Tolerances& tol = {});

struct VnsRecord {
  Index delta = 0;
  bool improved = false;
  Index incumbent_size = 0;
  bool proven = true;
};

struct VnsTrace {
  Index initial_objective = 0;
  std::vector<VnsRecord> records;
  CutPool pool;
};

Solution vns_solve(const Instance& inst, const VnsConfig& cfg = {}, VnsTrace* trace = nullptr);

}  // namespace l0cover

#endif  // L0COVER_HEURISTIC_HPP
