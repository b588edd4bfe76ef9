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

// Test-only LP helpers: an optimality check written against the KKT
// conditions directly, independent of the simplex internals, and a seeded
// generator of small feasible bounded LPs.

#ifndef L0COVER_TESTS_LP_ORACLE_HPP
#define L0COVER_TESTS_LP_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "l0cover/simplex.hpp"

namespace l0cover::testing {

struct KktReport {
  bool ok = true;
  std::string why;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
};

/// Checks that (x, y) is a primal/dual optimal pair for prob.
inline KktReport check_kkt(const lp::LpProblem<double>& prob, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y, double tol = 1e-7) {
  KktReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) rep.why = std::move(why);
    rep.ok = false;
  };
  const auto n = prob.num_vars();
  const auto r = prob.num_rows();
  if (x.size() != n || y.size() != r) {
    fail("dimension mismatch");
    return rep;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (x[j] < prob.lower[j] - tol || x[j] > prob.upper[j] + tol) fail("bound violated");
  }
  const Eigen::VectorXd ax = prob.constraints * x;
  for (Eigen::Index i = 0; i < r; ++i) {
    const double slack = ax[i] - prob.rhs[i];
    const double yi = y[i];
    switch (prob.relations[static_cast<std::size_t>(i)]) {
      case lp::Relation::LessEqual:
        if (slack > tol) fail("row <= violated");
        if (yi > tol) fail("row <= has positive multiplier");
        break;
      case lp::Relation::GreaterEqual:
        if (slack < -tol) fail("row >= violated");
        if (yi < -tol) fail("row >= has negative multiplier");
        break;
      case lp::Relation::Equal:
        if (std::abs(slack) > tol) fail("row = violated");
        break;
    }
    if (std::abs(yi) > tol && std::abs(slack) > 10 * tol) fail("row complementarity");
  }
  const Eigen::VectorXd d = prob.objective - prob.constraints.transpose() * y;
  double dual = prob.rhs.dot(y);
  for (Eigen::Index j = 0; j < n; ++j) {
    const bool at_lo = std::isfinite(prob.lower[j]) && x[j] <= prob.lower[j] + 10 * tol;
    const bool at_hi = std::isfinite(prob.upper[j]) && x[j] >= prob.upper[j] - 10 * tol;
    if (d[j] > tol) {
      if (!at_lo) fail("positive reduced cost off lower bound");
      dual += d[j] * prob.lower[j];
    } else if (d[j] < -tol) {
      if (!at_hi) fail("negative reduced cost off upper bound");
      dual += d[j] * prob.upper[j];
    }
  }
  rep.primal_objective = prob.objective.dot(x);
  rep.dual_objective = dual;
  if (std::abs(rep.primal_objective - dual) > 1e-6 * std::max(1.0, std::abs(dual))) {
    fail("objective gap");
  }
  return rep;
}

/// Feasible, bounded LP with up to max_dim variables and rows.
inline lp::LpProblem<double> random_lp(std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 5);
  const int n = dim(rng);
  const int rows = dim(rng);
  lp::LpProblem<double> prob(n);
  Eigen::VectorXd x0(n);
  for (int j = 0; j < n; ++j) {
    x0[j] = 2.0 * u(rng);
    prob.objective[j] = u(rng);
    switch (kind(rng)) {
      case 0: break;  // free; boxed by rows below
      case 1: prob.lower[j] = x0[j] - 1.0 - std::abs(u(rng)); break;
      case 2: prob.upper[j] = x0[j] + 1.0 + std::abs(u(rng)); break;
      case 3: prob.lower[j] = prob.upper[j] = x0[j]; break;
      default:
        prob.lower[j] = x0[j] - std::abs(u(rng));
        prob.upper[j] = x0[j] + std::abs(u(rng));
    }
  }
  for (int i = 0; i < rows; ++i) {
    Eigen::VectorXd a(n);
    for (int j = 0; j < n; ++j) a[j] = std::abs(u(rng)) < 0.3 ? 0.0 : u(rng);
    const double ax = a.dot(x0);
    switch (kind(rng) % 3) {
      case 0: prob.add_row(a, lp::Relation::LessEqual, ax + std::abs(u(rng))); break;
      case 1: prob.add_row(a, lp::Relation::GreaterEqual, ax - std::abs(u(rng))); break;
      default: prob.add_row(a, lp::Relation::Equal, ax); break;
    }
  }
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    prob.add_row(e, lp::Relation::LessEqual, 10.0);
    prob.add_row(e, lp::Relation::GreaterEqual, -10.0);
  }
  return prob;
}

}  // namespace l0cover::testing

#endif  // L0COVER_TESTS_LP_ORACLE_HPP
