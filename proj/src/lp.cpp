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

#include "l0cover/lp.hpp"

#include <cmath>
#include <string>

namespace l0cover {

LpProblem residual_lp(const Instance& inst, const Support& s) {
  const Index n = inst.rows();
  const Index k = s.size();
  const Index nw = inst.norm() == Norm::L1 ? n : 1;
  const Matrix& H = inst.dictionary();
  const Vector& y = inst.observation();

  LpProblem prob(k + nw);
  prob.objective.tail(nw).setOnes();
  prob.lower.tail(nw).setZero();

  Vector row(k + nw);
  for (Index i = 0; i < n; ++i) {
    row.setZero();
    Index c = 0;
    for (Index j : s) row[c++] = H(i, j);
    const Index w = inst.norm() == Norm::L1 ? k + i : k;
    // y_i - h_i x <= w   and   y_i - h_i x >= -w
    row[w] = 1.0;
    prob.add_row(row, lp::Relation::GreaterEqual, y[i]);
    row[w] = -1.0;
    prob.add_row(row, lp::Relation::LessEqual, y[i]);
  }
  return prob;
}

RestrictedFit min_residual(const Instance& inst, const Support& s) {
  RestrictedFit fit;
  fit.x = Vector::Zero(inst.cols());
  if (!s.empty() && s.indices().back() >= inst.cols()) {
    throw ContractViolation("support index out of range for min_residual");
  }
  if (s.empty()) {
    fit.residual = norm_of(inst.norm(), inst.observation());
    fit.lp.status = lp::LpStatus::Optimal;
    fit.lp.objective = fit.residual;
    fit.lp.dual_objective = fit.residual;
    return fit;
  }
  fit.lp = lp::simplex_solve(residual_lp(inst, s));
  if (!fit.lp.optimal()) {
    throw NumericalFailure(std::string("min_residual: simplex returned ") +
                           lp::to_string(fit.lp.status) + " on support " + to_string(s));
  }
  Index c = 0;
  for (Index j : s) fit.x[j] = fit.lp.primal[c++];
  fit.residual = residual_norm(inst, fit.x);
  return fit;
}

bool is_forbidden(const Instance& inst, const Support& s, const Tolerances& tol) {
  return min_residual(inst, s).residual > inst.alpha() + tol.feas_tol;
}

ResidualOracle::ResidualOracle(const Instance& inst, Tolerances tol)
    : inst_(inst), tol_(tol) {
  tol_.validate();
}

const RestrictedFit& ResidualOracle::fit(const Support& s) {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  RestrictedFit f = min_residual(inst_, s);
  if (!s.empty()) {
    ++lp_calls_;
    max_gap_ = std::max(max_gap_, std::abs(f.lp.objective - f.lp.dual_objective));
  }
  return cache_.emplace(s, std::move(f)).first->second;
}

}  // namespace l0cover
