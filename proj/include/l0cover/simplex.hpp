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
 * @file simplex.hpp
 * @brief Dense two-phase bounded-variable primal simplex.
 *
 * Solves
 *
 *     min  c'x   s.t.   a_i'x  {<=, >=, =}  b_i,   lo <= x <= hi
 *
 * where bounds may be infinite. Every row gets a slack s_i with
 * a_i'x + s_i = b_i; rows whose initial slack is out of range get an
 * artificial column for phase one. Free variables stay in the bounded
 * simplex as nonbasic-at-zero columns (no x = x+ - x- splitting).
 *
 * Pricing is Dantzig (largest reduced cost); after a budget of
 * consecutive degenerate pivots the phase switches to Bland's rule for
 * the rest of its run. Optima are re-derived from a fresh LU of the basis
 * and certified by dual feasibility and primal/dual objective agreement.
 */

#ifndef L0COVER_SIMPLEX_HPP
#define L0COVER_SIMPLEX_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace l0cover::lp {

using Index = Eigen::Index;

enum class Relation : std::uint8_t { LessEqual, GreaterEqual, Equal };

enum class LpStatus : std::uint8_t { Optimal, Infeasible, Unbounded, NumericalFailure };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::NumericalFailure: return "numerical-failure";
  }
  return "?";
}

template <typename Scalar>
struct LpProblem {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

  Vec objective;
  Mat constraints;
  std::vector<Relation> relations;
  Vec rhs;
  Vec lower;
  Vec upper;

  LpProblem() = default;

  /// A problem with num_vars free, zero-cost variables and no rows.
  explicit LpProblem(Index num_vars)
      : objective(Vec::Zero(num_vars)),
        constraints(0, num_vars),
        rhs(0),
        lower(Vec::Constant(num_vars, -kInf)),
        upper(Vec::Constant(num_vars, kInf)) {}

  Index num_vars() const { return objective.size(); }
  Index num_rows() const { return constraints.rows(); }

  template <typename Derived>
  void add_row(const Eigen::MatrixBase<Derived>& coeffs, Relation rel, Scalar b) {
    if (coeffs.size() != num_vars()) {
      throw std::invalid_argument("add_row: coefficient count does not match variables");
    }
    const Index r = num_rows();
    constraints.conservativeResize(r + 1, Eigen::NoChange);
    constraints.row(r) = coeffs.transpose();
    rhs.conservativeResize(r + 1);
    rhs[r] = b;
    relations.push_back(rel);
  }

  void validate() const {
    const Index n = num_vars();
    if (n < 1) throw std::invalid_argument("LP needs at least one variable");
    if (constraints.cols() != n || lower.size() != n || upper.size() != n ||
        rhs.size() != constraints.rows() ||
        static_cast<Index>(relations.size()) != constraints.rows()) {
      throw std::invalid_argument("LP dimensions are inconsistent");
    }
    if (!objective.allFinite() || !constraints.allFinite() || !rhs.allFinite()) {
      throw std::invalid_argument("LP coefficients must be finite");
    }
    for (Index j = 0; j < n; ++j) {
      if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] == kInf ||
          upper[j] == -kInf) {
        throw std::invalid_argument("LP bound " + std::to_string(j) + " is malformed");
      }
    }
  }
};

template <typename Scalar>
struct LpOutcome {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  LpStatus status = LpStatus::NumericalFailure;
  Vec primal;
  Scalar objective = 0;
  /// One multiplier per constraint row (d objective / d rhs).
  Vec duals;
  Scalar dual_objective = 0;
  /// Improving direction when status == Unbounded.
  Vec ray;
  std::int64_t iterations = 0;

  bool optimal() const { return status == LpStatus::Optimal; }
};

template <typename Scalar>
struct SimplexOptions {
  Scalar feas_tol = Scalar(1e-9);
  Scalar opt_tol = Scalar(1e-9);
  Scalar pivot_tol = Scalar(1e-9);
  Scalar duality_tol = Scalar(1e-7);
  /// Consecutive degenerate pivots tolerated before switching to Bland.
  int degenerate_budget = 50;
  int refactor_interval = 64;
  /// 0 selects a size-dependent cap.
  std::int64_t max_iterations = 0;
};

namespace detail {

template <typename Scalar>
class BoundedSimplex {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Problem = LpProblem<Scalar>;
  using Outcome = LpOutcome<Scalar>;

  static constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

  BoundedSimplex(const Problem& prob, const SimplexOptions<Scalar>& opts)
      : prob_(prob), opts_(opts) {}

  Outcome solve() {
    Outcome out;
    const Index n = prob_.num_vars();
    for (Index j = 0; j < n; ++j) {
      if (prob_.lower[j] > prob_.upper[j] + opts_.feas_tol) {
        out.status = LpStatus::Infeasible;
        return out;
      }
    }
    setup();
    iteration_cap_ = opts_.max_iterations > 0
                         ? opts_.max_iterations
                         : 200 * (rows_ + cols_) + 1000;

    if (num_artificial_ > 0) {
      Vec phase_one = Vec::Zero(cols_);
      for (Index j = first_artificial_; j < cols_; ++j) phase_one[j] = 1;
      const LpStatus st = run_phase(phase_one, out.iterations);
      if (st != LpStatus::Optimal) {
        out.status = LpStatus::NumericalFailure;
        return out;
      }
      Scalar infeasibility = 0;
      for (Index j = first_artificial_; j < cols_; ++j) infeasibility += x_[j];
      if (infeasibility > opts_.feas_tol * std::max<Scalar>(1, scale_)) {
        out.status = LpStatus::Infeasible;
        out.duals = phase_duals(phase_one);
        return out;
      }
      retire_artificials();
    }

    Vec cost = Vec::Zero(cols_);
    cost.head(n) = prob_.objective;
    const LpStatus st = run_phase(cost, out.iterations);
    if (st == LpStatus::Unbounded) {
      out.status = LpStatus::Unbounded;
      out.ray = ray_.head(n);
      out.primal = x_.head(n);
      return out;
    }
    if (st != LpStatus::Optimal) {
      out.status = st;
      return out;
    }
    certify(cost, out);
    return out;
  }

 private:
  enum class State : std::uint8_t { Basic, AtLower, AtUpper, AtZero };

  void setup() {
    const Index n = prob_.num_vars();
    rows_ = prob_.num_rows();
    const Index base = n + rows_;

    lo_ = Vec(base);
    hi_ = Vec(base);
    lo_.head(n) = prob_.lower;
    hi_.head(n) = prob_.upper;
    for (Index i = 0; i < rows_; ++i) {
      switch (prob_.relations[static_cast<std::size_t>(i)]) {
        case Relation::LessEqual: lo_[n + i] = 0; hi_[n + i] = kInf; break;
        case Relation::GreaterEqual: lo_[n + i] = -kInf; hi_[n + i] = 0; break;
        case Relation::Equal: lo_[n + i] = 0; hi_[n + i] = 0; break;
      }
    }

    state_.assign(static_cast<std::size_t>(base), State::AtLower);
    Vec x = Vec::Zero(base);
    for (Index j = 0; j < n; ++j) {
      if (std::isfinite(lo_[j])) {
        x[j] = lo_[j];
        state_[j] = State::AtLower;
      } else if (std::isfinite(hi_[j])) {
        x[j] = hi_[j];
        state_[j] = State::AtUpper;
      } else {
        x[j] = 0;
        state_[j] = State::AtZero;
      }
    }

    // Slack values needed to satisfy every row with the structurals at rest.
    const Vec need = prob_.rhs - prob_.constraints * x.head(n);
    std::vector<Index> art_rows;
    std::vector<Scalar> art_sign;
    basis_.assign(static_cast<std::size_t>(rows_), 0);
    for (Index i = 0; i < rows_; ++i) {
      const Index s = n + i;
      const Scalar v = need[i];
      if (v >= lo_[s] - opts_.feas_tol && v <= hi_[s] + opts_.feas_tol) {
        x[s] = v;
        state_[s] = State::Basic;
        basis_[i] = s;
      } else {
        const Scalar clamp = v < lo_[s] ? lo_[s] : hi_[s];
        x[s] = clamp;
        state_[s] = clamp == lo_[s] ? State::AtLower : State::AtUpper;
        art_rows.push_back(i);
        art_sign.push_back(v > clamp ? Scalar(1) : Scalar(-1));
      }
    }

    num_artificial_ = static_cast<Index>(art_rows.size());
    first_artificial_ = base;
    cols_ = base + num_artificial_;

    full_ = Mat::Zero(rows_, cols_);
    full_.leftCols(n) = prob_.constraints;
    full_.block(0, n, rows_, rows_).setIdentity();
    lo_.conservativeResize(cols_);
    hi_.conservativeResize(cols_);
    x.conservativeResize(cols_);
    for (Index a = 0; a < num_artificial_; ++a) {
      const Index i = art_rows[static_cast<std::size_t>(a)];
      const Index col = base + a;
      full_(i, col) = art_sign[static_cast<std::size_t>(a)];
      lo_[col] = 0;
      hi_[col] = kInf;
      x[col] = std::abs(need[i] - x[n + i]);
      state_.push_back(State::Basic);
      basis_[i] = col;
    }
    x_ = std::move(x);

    scale_ = 1;
    if (rows_ > 0) {
      scale_ = std::max<Scalar>(1, prob_.rhs.template lpNorm<Eigen::Infinity>());
    }

    // Basis columns are signed unit vectors, so B^{-1} is diagonal.
    tableau_ = full_;
    for (Index i = 0; i < rows_; ++i) {
      const Scalar d = full_(i, basis_[i]);
      tableau_.row(i) /= d;
    }
    pivots_since_refactor_ = 0;
  }

  bool is_fixed(Index j) const { return lo_[j] == hi_[j]; }

  /// Recomputes the tableau and basic values from the original columns.
  bool refactor() {
    if (rows_ == 0) return true;
    Mat B(rows_, rows_);
    for (Index i = 0; i < rows_; ++i) B.col(i) = full_.col(basis_[i]);
    Eigen::FullPivLU<Mat> lu(B);
    if (!lu.isInvertible()) return false;
    tableau_ = lu.solve(full_);
    Vec rest = Vec::Zero(cols_);
    for (Index j = 0; j < cols_; ++j) {
      if (state_[j] != State::Basic) rest[j] = x_[j];
    }
    const Vec rhs_basic = lu.solve(Vec(prob_.rhs - full_ * rest));
    for (Index i = 0; i < rows_; ++i) x_[basis_[i]] = rhs_basic[i];
    pivots_since_refactor_ = 0;
    return true;
  }

  /// Entering column and direction (+1 increase, -1 decrease); -1 if none.
  Index price(const Vec& d, bool bland, Scalar& dir) const {
    Index best = -1;
    Scalar best_score = 0;
    for (Index j = 0; j < cols_; ++j) {
      const State st = state_[j];
      if (st == State::Basic || is_fixed(j)) continue;
      Scalar step = 0;
      if (st == State::AtLower && d[j] < -opts_.opt_tol) step = 1;
      else if (st == State::AtUpper && d[j] > opts_.opt_tol) step = -1;
      else if (st == State::AtZero && std::abs(d[j]) > opts_.opt_tol) step = d[j] < 0 ? 1 : -1;
      if (step == 0) continue;
      if (bland) {
        dir = step;
        return j;
      }
      const Scalar score = std::abs(d[j]);
      if (score > best_score) {
        best_score = score;
        best = j;
        dir = step;
      }
    }
    return best;
  }

  LpStatus run_phase(const Vec& cost, std::int64_t& iterations) {
    bool bland = false;
    int degenerate_run = 0;
    bool fresh = false;
    for (;;) {
      if (iterations >= iteration_cap_) return LpStatus::NumericalFailure;
      if (pivots_since_refactor_ >= opts_.refactor_interval) {
        if (!refactor()) return LpStatus::NumericalFailure;
        fresh = true;
      }
      Vec cb(rows_);
      for (Index i = 0; i < rows_; ++i) cb[i] = cost[basis_[i]];
      const Vec d = cost - tableau_.transpose() * cb;

      Scalar dir = 0;
      const Index enter = price(d, bland, dir);
      if (enter < 0) {
        if (fresh || pivots_since_refactor_ == 0) return LpStatus::Optimal;
        if (!refactor()) return LpStatus::NumericalFailure;
        fresh = true;
        continue;
      }
      fresh = false;
      ++iterations;

      const auto col = tableau_.col(enter);
      Scalar step = kInf;
      Index leave_row = -1;
      Scalar leave_pivot = 0;
      if (std::isfinite(lo_[enter]) && std::isfinite(hi_[enter])) step = hi_[enter] - lo_[enter];
      for (Index i = 0; i < rows_; ++i) {
        const Scalar alpha = dir * col[i];
        if (std::abs(alpha) <= opts_.pivot_tol) continue;
        const Index b = basis_[i];
        Scalar limit;
        if (alpha > 0) {
          if (!std::isfinite(lo_[b])) continue;
          limit = (x_[b] - lo_[b]) / alpha;
        } else {
          if (!std::isfinite(hi_[b])) continue;
          limit = (hi_[b] - x_[b]) / -alpha;
        }
        limit = std::max<Scalar>(limit, 0);
        bool take = false;
        if (leave_row < 0) {
          take = limit <= step;
        } else if (limit < step - Scalar(1e-12)) {
          take = true;
        } else if (limit <= step + Scalar(1e-12)) {
          // Tie: Bland keeps the lowest basic index, Dantzig the largest pivot.
          take = bland ? b < basis_[leave_row] : std::abs(alpha) > std::abs(leave_pivot);
        }
        if (take) {
          step = limit;
          leave_row = i;
          leave_pivot = alpha;
        }
      }

      if (!std::isfinite(step)) {
        ray_ = Vec::Zero(cols_);
        ray_[enter] = dir;
        for (Index i = 0; i < rows_; ++i) ray_[basis_[i]] = -dir * col[i];
        return LpStatus::Unbounded;
      }

      if (step <= opts_.feas_tol) {
        if (++degenerate_run > opts_.degenerate_budget) bland = true;
      } else {
        degenerate_run = 0;
      }

      x_[enter] += dir * step;
      for (Index i = 0; i < rows_; ++i) x_[basis_[i]] -= dir * step * col[i];

      if (leave_row < 0) {
        // Bound flip.
        state_[enter] = dir > 0 ? State::AtUpper : State::AtLower;
        x_[enter] = dir > 0 ? hi_[enter] : lo_[enter];
        continue;
      }

      const Index leaving = basis_[leave_row];
      if (leave_pivot > 0) {
        state_[leaving] = State::AtLower;
        x_[leaving] = lo_[leaving];
      } else {
        state_[leaving] = State::AtUpper;
        x_[leaving] = hi_[leaving];
      }
      pivot(leave_row, enter);
    }
  }

  void pivot(Index r, Index enter) {
    const Scalar p = tableau_(r, enter);
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> prow = tableau_.row(r) / p;
    Vec pcol = tableau_.col(enter);
    pcol[r] = 0;
    tableau_.noalias() -= pcol * prow;
    tableau_.row(r) = prow;
    basis_[r] = enter;
    state_[enter] = State::Basic;
    ++pivots_since_refactor_;
  }

  /// Pins artificials at zero and pivots basic ones out where possible.
  void retire_artificials() {
    for (Index j = first_artificial_; j < cols_; ++j) {
      hi_[j] = 0;
      lo_[j] = 0;
    }
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      Index best = -1;
      Scalar best_abs = opts_.pivot_tol;
      for (Index j = 0; j < first_artificial_; ++j) {
        if (state_[j] == State::Basic) continue;
        const Scalar a = std::abs(tableau_(i, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best < 0) continue;  // redundant row; artificial stays basic at zero
      const Index leaving = basis_[i];
      x_[leaving] = 0;
      state_[leaving] = State::AtLower;
      pivot(i, best);
    }
    for (Index j = first_artificial_; j < cols_; ++j) {
      if (state_[j] != State::Basic) x_[j] = 0;
    }
    refactor();
  }

  Vec phase_duals(const Vec& cost) const {
    if (rows_ == 0) return Vec(0);
    Mat B(rows_, rows_);
    Vec cb(rows_);
    for (Index i = 0; i < rows_; ++i) {
      B.col(i) = full_.col(basis_[i]);
      cb[i] = cost[basis_[i]];
    }
    return B.transpose().fullPivLu().solve(cb);
  }

  void certify(const Vec& cost, Outcome& out) {
    const Index n = prob_.num_vars();
    if (!refactor()) {
      out.status = LpStatus::NumericalFailure;
      return;
    }
    const Vec y = phase_duals(cost);
    const Vec d = cost - full_.transpose() * y;

    const Scalar tol = std::max<Scalar>(opts_.feas_tol, 1e-8) * 10;
    for (Index j = 0; j < cols_; ++j) {
      if (x_[j] < lo_[j] - tol * std::max<Scalar>(1, std::abs(lo_[j])) ||
          x_[j] > hi_[j] + tol * std::max<Scalar>(1, std::abs(hi_[j]))) {
        out.status = LpStatus::NumericalFailure;
        return;
      }
    }
    const Scalar dual_tol = opts_.opt_tol * 100;
    Scalar dual_obj = rows_ > 0 ? Scalar(prob_.rhs.dot(y)) : Scalar(0);
    for (Index j = 0; j < cols_; ++j) {
      if (state_[j] == State::Basic) continue;
      if (!is_fixed(j)) {
        const bool ok = (state_[j] == State::AtLower && d[j] >= -dual_tol) ||
                        (state_[j] == State::AtUpper && d[j] <= dual_tol) ||
                        (state_[j] == State::AtZero && std::abs(d[j]) <= dual_tol);
        if (!ok) {
          out.status = LpStatus::NumericalFailure;
          return;
        }
      }
      dual_obj += d[j] * x_[j];
    }
    const Scalar primal_obj = prob_.objective.dot(x_.head(n));
    out.primal = x_.head(n);
    out.objective = primal_obj;
    out.duals = y;
    out.dual_objective = dual_obj;
    out.status = std::abs(primal_obj - dual_obj) <= opts_.duality_tol ? LpStatus::Optimal
                                                                       : LpStatus::NumericalFailure;
  }

  const Problem& prob_;
  SimplexOptions<Scalar> opts_;

  Index rows_ = 0;
  Index cols_ = 0;
  Index first_artificial_ = 0;
  Index num_artificial_ = 0;
  Scalar scale_ = 1;

  Mat full_;
  Mat tableau_;
  Vec lo_;
  Vec hi_;
  Vec x_;
  Vec ray_;
  std::vector<State> state_;
  std::vector<Index> basis_;
  int pivots_since_refactor_ = 0;
  std::int64_t iteration_cap_ = 0;
};

}  // namespace detail

/// Solves prob to certified optimality or reports why it cannot.
template <typename Scalar>
LpOutcome<Scalar> simplex_solve(const LpProblem<Scalar>& prob,
                                const SimplexOptions<Scalar>& opts = {}) {
  prob.validate();
  return detail::BoundedSimplex<Scalar>(prob, opts).solve();
}

}  // namespace l0cover::lp

#endif  // L0COVER_SIMPLEX_HPP
