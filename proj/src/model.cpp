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

#include "l0cover/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace l0cover {

std::string to_string(Norm p) { return p == Norm::L1 ? "1" : "inf"; }

void Tolerances::validate() const {
  if (!(zero_tol > 0.0) || !(feas_tol > 0.0) || !(float_tol > 0.0)) {
    throw ContractViolation("tolerances must be strictly positive");
  }
  if (!(zero_tol < 1.0)) throw ContractViolation("zero_tol must be < 1");
}

Instance::Instance(Matrix H, Vector y, Norm p, double alpha)
    : H_(std::move(H)), y_(std::move(y)), p_(p), alpha_(alpha) {
  if (H_.rows() < 1 || H_.cols() < 1) {
    throw ContractViolation("instance needs n >= 1 and m >= 1");
  }
  if (y_.size() != H_.rows()) {
    throw ContractViolation("observation length " + std::to_string(y_.size()) +
                            " does not match " + std::to_string(H_.rows()) + " rows");
  }
  if (!std::isfinite(alpha_) || alpha_ < 0.0) {
    throw ContractViolation("alpha must be finite and nonnegative");
  }
  if (!H_.allFinite() || !y_.allFinite()) {
    throw ContractViolation("dictionary and observation must be finite");
  }
}

Support::Support(std::vector<Index> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
    throw ContractViolation("support has duplicate indices");
  }
  if (!idx_.empty() && idx_.front() < 0) {
    throw ContractViolation("support has a negative index");
  }
}

Support Support::from_indicator(const Vector& b) {
  std::vector<Index> idx;
  for (Index j = 0; j < b.size(); ++j) {
    if (b[j] > 0.5) idx.push_back(j);
  }
  return Support(std::move(idx));
}

Support Support::full(Index m) {
  std::vector<Index> idx(static_cast<std::size_t>(m));
  for (Index j = 0; j < m; ++j) idx[static_cast<std::size_t>(j)] = j;
  return Support(std::move(idx));
}

Support Support::from_mask(std::uint64_t mask, Index m) {
  std::vector<Index> idx;
  for (Index j = 0; j < m; ++j) {
    if (mask >> j & 1U) idx.push_back(j);
  }
  return Support(std::move(idx));
}

bool Support::contains(Index j) const {
  return std::binary_search(idx_.begin(), idx_.end(), j);
}

bool Support::is_subset_of(const Support& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

Support Support::with(Index j) const {
  if (contains(j)) return *this;
  auto idx = idx_;
  idx.insert(std::upper_bound(idx.begin(), idx.end(), j), j);
  Support s;
  s.idx_ = std::move(idx);
  return s;
}

Support Support::without(Index j) const {
  Support s;
  s.idx_.reserve(idx_.size());
  for (Index k : idx_) {
    if (k != j) s.idx_.push_back(k);
  }
  return s;
}

Support Support::complement(Index m) const {
  Support s;
  for (Index j = 0; j < m; ++j) {
    if (!contains(j)) s.idx_.push_back(j);
  }
  return s;
}

Vector Support::indicator(Index m) const {
  Vector b = Vector::Zero(m);
  for (Index j : idx_) {
    if (j >= m) throw ContractViolation("support index out of range");
    b[j] = 1.0;
  }
  return b;
}

std::uint64_t Support::mask() const {
  std::uint64_t mask = 0;
  for (Index j : idx_) {
    if (j >= 64) throw ContractViolation("support mask needs indices < 64");
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::string to_string(const Support& s) {
  if (s.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (Index j : s) {
    if (!first) os << ' ';
    os << j + 1;
    first = false;
  }
  return os.str();
}

double norm_of(Norm p, const Vector& v) {
  return p == Norm::L1 ? v.lpNorm<1>() : v.lpNorm<Eigen::Infinity>();
}

Support support_of(const Vector& x, const Tolerances& tol) {
  std::vector<Index> idx;
  for (Index j = 0; j < x.size(); ++j) {
    if (std::abs(x[j]) > tol.zero_tol) idx.push_back(j);
  }
  return Support(std::move(idx));
}

bool is_feasible(const Instance& inst, const Vector& x, const Tolerances& tol) {
  return residual_norm(inst, x) <= inst.alpha() + tol.feas_tol;
}

Solution make_solution(const Instance& inst, Vector x, const Tolerances& tol) {
  Solution sol;
  sol.residual = residual_norm(inst, x);
  sol.support = support_of(x, tol);
  sol.objective = sol.support.size();
  sol.x = std::move(x);
  return sol;
}

}  // namespace l0cover
