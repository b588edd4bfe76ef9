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
 * @file model.hpp
 * @brief Problem data for threshold sparse approximation.
 *
 * An instance asks for a vector x with the fewest nonzeros such that
 * ||y - H x||_p <= alpha, with p either 1 or infinity.
 */

#ifndef L0COVER_MODEL_HPP
#define L0COVER_MODEL_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace l0cover {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Norm : std::uint8_t { L1, LInf };

std::string to_string(Norm p);

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when no support at all, not even [m], meets the threshold.
class ProblemInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the LP engine cannot certify an answer.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double zero_tol = 1e-9;
  double feas_tol = 1e-7;
  double float_tol = 1e-9;

  void validate() const;
};

/**
 * @brief Dictionary, observation, norm selector and threshold.
 *
 * Immutable once constructed; the constructor rejects empty dimensions,
 * negative thresholds and non-finite data.
 */
class Instance {
 public:
  Instance(Matrix H, Vector y, Norm p, double alpha);

  Index rows() const { return H_.rows(); }
  Index cols() const { return H_.cols(); }
  const Matrix& dictionary() const { return H_; }
  const Vector& observation() const { return y_; }
  Norm norm() const { return p_; }
  double alpha() const { return alpha_; }

  /// Same data with a different threshold and/or norm.
  Instance with(Norm p, double alpha) const { return Instance(H_, y_, p, alpha); }

 private:
  Matrix H_;
  Vector y_;
  Norm p_;
  double alpha_;
};

/**
 * @brief Sorted set of 0-based column indices.
 *
 * Rendered 1-based by to_string().
 */
class Support {
 public:
  Support() = default;
  Support(std::vector<Index> indices);
  Support(std::initializer_list<Index> indices)
      : Support(std::vector<Index>(indices)) {}

  /// Builds a support from a 0/1 (or fractional, > 0.5) indicator vector.
  static Support from_indicator(const Vector& b);
  static Support full(Index m);
  /// Builds the support whose bit j is set in mask.
  static Support from_mask(std::uint64_t mask, Index m);

  const std::vector<Index>& indices() const { return idx_; }
  Index size() const { return static_cast<Index>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  bool contains(Index j) const;
  bool is_subset_of(const Support& other) const;

  Support with(Index j) const;
  Support without(Index j) const;
  /// Columns of [m] not in this support.
  Support complement(Index m) const;

  Vector indicator(Index m) const;
  std::uint64_t mask() const;

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  friend bool operator==(const Support&, const Support&) = default;
  friend auto operator<=>(const Support&, const Support&) = default;

 private:
  std::vector<Index> idx_;
};

/// "3" or "1 3"; the empty support renders as "-".
std::string to_string(const Support& s);

/// Solver statistics shared by every method; unused fields stay zero.
struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t cuts = 0;
  std::int64_t lp_calls = 0;
  std::int64_t iterations = 0;
  /// Proven lower bound on ||x||_0.
  Index lower_bound = 0;
  bool limit_hit = false;
};

struct Solution {
  Vector x;
  Support support;
  double residual = 0.0;
  Index objective = 0;
  SolveStats stats;
};

/// ||y - H x||_p for any dense expression x.
template <typename Derived>
double residual_norm(const Instance& inst, const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() != inst.cols() || x.cols() != 1) {
    throw ContractViolation("residual_norm: x has length " + std::to_string(x.rows()) +
                            ", expected " + std::to_string(inst.cols()));
  }
  const Vector r = inst.observation() - inst.dictionary() * x;
  return inst.norm() == Norm::L1 ? r.template lpNorm<1>()
                                 : r.template lpNorm<Eigen::Infinity>();
}

/// ||v||_p for the instance's norm.
double norm_of(Norm p, const Vector& v);

Support support_of(const Vector& x, const Tolerances& tol = {});

bool is_feasible(const Instance& inst, const Vector& x, const Tolerances& tol = {});

/// Packs x into a Solution, deriving support, residual and objective.
Solution make_solution(const Instance& inst, Vector x, const Tolerances& tol = {});

}  // namespace l0cover

#endif  // L0COVER_MODEL_HPP
