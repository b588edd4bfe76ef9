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
 * @file covering.hpp
 * @brief Set-covering reformulation solved with lazy forbidden-support cuts.
 *
 * A binary b is the indicator of a feasible support iff it satisfies the
 * covering cut of every forbidden support. The two-stage loop solves the
 * covering IP over the cuts found so far, certifies the optimal support with
 * the residual LP, and adds the cut of a maximal forbidden superset whenever
 * the certification fails.
 */

#ifndef L0COVER_COVERING_HPP
#define L0COVER_COVERING_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "l0cover/cuts.hpp"
#include "l0cover/lp.hpp"
#include "l0cover/model.hpp"

namespace l0cover {

/// a'b (<=, >=, =) rhs over the support indicators.
struct LinearConstraint {
  Vector coeffs;
  lp::Relation relation = lp::Relation::LessEqual;
  double rhs = 0.0;

  bool satisfied_by(const Vector& b, double tol = 1e-9) const;
};

struct CoveringLimits {
  std::int64_t max_nodes = 1'000'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
};

enum class CoverStatus : std::uint8_t { Optimal, Infeasible, LimitReached };

struct CoveringIpResult {
  CoverStatus status = CoverStatus::Infeasible;
  /// Best support found; meaningful when has_incumbent.
  Support support;
  bool has_incumbent = false;
  /// Proven lower bound on sum(b) over the constraint system.
  Index bound = 0;
  std::int64_t nodes = 0;
  std::int64_t lp_calls = 0;
};

struct CoveringIpOptions {
  CoveringLimits limits;
  double int_tol = 1e-6;
  /// Runs cut separation at fractional nodes when an oracle is supplied.
  ResidualOracle* separation_oracle = nullptr;
  SeparationOptions separation;
  int max_cut_rounds = 3;
};

/**
 * @brief Minimum-cardinality binary b satisfying all pool cuts and side rows.
 *
 * Best-first branch and bound with DFS tie-breaking over the LP relaxation;
 * branching on the most fractional b_j (ties: lowest index). Cuts found by
 * optional separation are appended to pool.
 */
CoveringIpResult solve_covering_ip(CutPool& pool, Index m, const CoveringIpOptions& opts = {},
                                   const std::vector<LinearConstraint>& side = {});

struct TwoStageConfig {
  Tolerances tol;
  CoveringIpOptions ip;
  std::int64_t max_iterations = 10'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
  bool family_cuts = true;
  /// Separate at fractional covering nodes (branch-and-cut flavour of stage one).
  bool separate_fractional = false;
};

struct TwoStageIteration {
  std::int64_t iteration = 0;
  std::size_t pool_size = 0;
  Index ip_objective = 0;
  Support support;
  bool forbidden = false;
  std::vector<std::string> cuts_added;
  std::int64_t nodes = 0;
};

struct TwoStageTrace {
  std::vector<TwoStageIteration> iterations;
  /// Final pool; its forbidden history lists every maximal extension.
  CutPool pool;
  /// (J, maximal J') for each lazy extension.
  std::vector<std::pair<Support, Support>> extensions;
  double max_duality_gap = 0.0;
};

/**
 * @brief Exact minimum support via the lazy covering loop.
 *
 * Throws ProblemInfeasible when even the full support is forbidden. On an
 * iteration or time limit, returns a feasible incumbent with
 * stats.limit_hit set and stats.lower_bound from the last covering IP.
 */
Solution solve_two_stage(const Instance& inst, const TwoStageConfig& config = {},
                         TwoStageTrace* trace = nullptr);

/**
 * @brief Embeds the residual-minimizing x for a feasible support.
 *
 * The reported support drops entries the LP set to zero. Throws
 * ContractViolation if s is forbidden.
 */
Solution recover_x(const Instance& inst, const Support& s, const Tolerances& tol = {});
Solution recover_x(ResidualOracle& oracle, const Support& s);

}  // namespace l0cover

#endif  // L0COVER_COVERING_HPP
