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
 * @file lp.hpp
 * @brief Fixed-support residual minimization and the forbidden-support test.
 */

#ifndef L0COVER_LP_HPP
#define L0COVER_LP_HPP

#include <cstdint>
#include <map>

#include "l0cover/model.hpp"
#include "l0cover/simplex.hpp"

namespace l0cover {

using LpOutcome = lp::LpOutcome<double>;
using LpProblem = lp::LpProblem<double>;

/// Optimum of min ||y - H_S x_S||_p, embedded back into R^m.
struct RestrictedFit {
  /// ||y - H x|| recomputed from x, not the LP objective.
  double residual = 0.0;
  /// Full-length vector, zero off the support.
  Vector x;
  /// LP primal is [x_S, w]; empty for the empty support.
  LpOutcome lp;
};

/// LP for min ||y - H_S x_S||_p: variables [x_S free, w >= 0].
LpProblem residual_lp(const Instance& inst, const Support& s);

/**
 * @brief Minimizes the residual over vectors supported on s.
 *
 * The empty support short-circuits to ||y||_p without calling the simplex.
 * Throws NumericalFailure if the LP cannot be certified.
 */
RestrictedFit min_residual(const Instance& inst, const Support& s);

/// True iff no x supported on s reaches ||y - Hx||_p <= alpha + feas_tol.
bool is_forbidden(const Instance& inst, const Support& s, const Tolerances& tol = {});

/**
 * @brief Memoizing front end to min_residual, with call accounting.
 *
 * One oracle belongs to one solve; it is not thread-safe.
 */
class ResidualOracle {
 public:
  explicit ResidualOracle(const Instance& inst, Tolerances tol = {});

  const Instance& instance() const { return inst_; }
  const Tolerances& tolerances() const { return tol_; }

  const RestrictedFit& fit(const Support& s);
  double residual(const Support& s) { return fit(s).residual; }
  bool forbidden(const Support& s) { return residual(s) > inst_.alpha() + tol_.feas_tol; }

  /// Simplex solves actually performed (cache misses on nonempty supports).
  std::int64_t lp_calls() const { return lp_calls_; }
  /// Largest |primal - dual| seen over all certified solves.
  double max_duality_gap() const { return max_gap_; }

 private:
  const Instance& inst_;
  Tolerances tol_;
  std::map<Support, RestrictedFit> cache_;
  std::int64_t lp_calls_ = 0;
  double max_gap_ = 0.0;
};

}  // namespace l0cover

#endif  // L0COVER_LP_HPP
