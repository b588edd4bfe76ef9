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
 * @file bnc.hpp
 * @brief Big-M mixed-integer formulations and their branch and cut.
 *
 * Column layout of the relaxation (stable; tests rely on it):
 *
 *     [ b_1 .. b_m | x_1 .. x_m | w ]      w has n entries for p = 1, one for p = inf
 *
 * Row layout:
 *
 *     2j, 2j+1          x_j - M b_j <= 0,   x_j + M b_j >= 0
 *     2m + 2i           h_i x + w_i >= y_i
 *     2m + 2i + 1       h_i x - w_i <= y_i
 *     2m + 2n           sum_i w_i <= alpha   (w <= alpha for p = inf)
 *     2m + 2n + 1 ...   cover cuts from the attached pool
 */

#ifndef L0COVER_BNC_HPP
#define L0COVER_BNC_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "l0cover/cuts.hpp"
#include "l0cover/lp.hpp"
#include "l0cover/model.hpp"

namespace l0cover {

/// The incumbent keeps hitting |x_j| ~ M after the allowed doublings.
class BigMSuspect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MipModel {
 public:
  MipModel(const Instance& inst, double big_m);

  const Instance& instance() const { return inst_; }
  Norm norm() const { return inst_.norm(); }
  double big_m() const { return big_m_; }

  Index num_binaries() const { return m_; }
  Index num_x() const { return m_; }
  Index num_w() const { return nw_; }
  Index num_coupling_rows() const { return 2 * m_; }
  Index num_residual_rows() const { return 2 * inst_.rows(); }
  Index num_budget_rows() const { return 1; }

  Index b_col(Index j) const { return j; }
  Index x_col(Index j) const { return m_ + j; }
  Index w_col(Index i) const { return 2 * m_ + i; }

  /// Static rows with b in [0, 1]; no cuts.
  const LpProblem& base() const { return base_; }

  CutPool& pool() { return pool_; }
  const CutPool& pool() const { return pool_; }

 private:
  Instance inst_;
  double big_m_;
  Index m_;
  Index nw_;
  LpProblem base_;
  CutPool pool_;
};

/// Throws ContractViolation unless big_m > 0.
MipModel build_mip(const Instance& inst, double big_m);

/**
 * @brief Heuristic M: safety * max(max_j |x*_j|, ||y||_inf).
 *
 * x* is the full-support residual minimizer. Falls back to 1 when both are
 * zero. Throws ProblemInfeasible when the full support is forbidden.
 */
double choose_big_M(const Instance& inst, double safety = 100.0, const Tolerances& tol = {});

/// Continuous relaxation at a node: b_j restricted to [b_lower_j, b_upper_j].
LpOutcome solve_relaxation(const MipModel& model, const Vector& b_lower, const Vector& b_upper);

struct BncConfig {
  Tolerances tol;
  /// 0 picks choose_big_M(inst, safety).
  double big_m = 0.0;
  double safety = 100.0;
  double m_guard = 0.01;
  int max_big_m_doublings = 2;
  bool use_cuts = true;
  bool family_cuts = true;
  int max_cut_rounds = 3;
  double int_tol = 1e-6;
  /// Node selections made depth-first after each new incumbent.
  int plunge_nodes = 8;
  std::int64_t max_nodes = 1'000'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
};

struct BncNodeRecord {
  std::int64_t id = 0;
  int depth = 0;
  double bound = 0.0;
  /// Number of fractional b_j at the final LP of the node.
  Index fractional = 0;
  int cuts_added = 0;
};

struct BncIncumbent {
  Index objective = 0;
  double max_abs_x = 0.0;
  double big_m = 0.0;
};

struct BncTrace {
  std::vector<BncNodeRecord> nodes;
  std::vector<BncIncumbent> incumbents;
  std::vector<double> big_m_history;
  std::vector<std::string> warnings;
  CutPool pool;
  double max_duality_gap = 0.0;
};

/**
 * @brief Exact minimum support through the big-M formulation.
 *
 * Every incumbent is checked against max_j |x_j| <= (1 - m_guard) M; a
 * violation (or an LP-infeasible root while the full support is feasible)
 * doubles M and restarts, up to max_big_m_doublings times, after which
 * BigMSuspect is thrown.
 */
Solution solve_branch_and_cut(const Instance& inst, const BncConfig& config = {},
                              BncTrace* trace = nullptr);

}  // namespace l0cover

#endif  // L0COVER_BNC_HPP
