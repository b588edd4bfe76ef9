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

#include <doctest.h>

#include <limits>
#include <random>

#include "l0cover/lp.hpp"
#include "l0cover/simplex.hpp"
#include "support/lp_oracle.hpp"

using namespace l0cover;
using lp::Relation;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Instance three_column(Norm p, double alpha) {
  Matrix H(2, 3);
  H << 1, 0, 1,
       0, 1, 1;
  return Instance(H, Vector::Ones(2), p, alpha);
}

}  // namespace

TEST_CASE("simplex analytic cases") {
  SUBCASE("single bound binds") {
    LpProblem prob(1);
    prob.objective[0] = 1.0;
    prob.add_row(Vector::Ones(1), Relation::GreaterEqual, 3.0);
    const auto out = lp::simplex_solve(prob);
    REQUIRE(out.optimal());
    CHECK(out.objective == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(out.primal[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(std::abs(out.objective - out.dual_objective) <= 1e-9);
  }
  SUBCASE("contradictory rows") {
    LpProblem prob(1);
    prob.add_row(Vector::Ones(1), Relation::LessEqual, 1.0);
    prob.add_row(Vector::Ones(1), Relation::GreaterEqual, 2.0);
    CHECK(lp::simplex_solve(prob).status == lp::LpStatus::Infeasible);
  }
  SUBCASE("contradictory bounds") {
    LpProblem prob(1);
    prob.lower[0] = 2.0;
    prob.upper[0] = 1.0;
    CHECK(lp::simplex_solve(prob).status == lp::LpStatus::Infeasible);
  }
  SUBCASE("open ray") {
    LpProblem prob(1);
    prob.objective[0] = -1.0;
    prob.lower[0] = 0.0;
    const auto out = lp::simplex_solve(prob);
    CHECK(out.status == lp::LpStatus::Unbounded);
    REQUIRE(out.ray.size() == 1);
    CHECK(out.ray[0] > 0.0);
  }
  SUBCASE("equality with free variables") {
    // min x + y  s.t.  x + y = 2, x - y = 0, free  -> (1, 1)
    LpProblem prob(2);
    prob.objective << 1.0, 1.0;
    prob.add_row(Vector{{1.0, 1.0}}, Relation::Equal, 2.0);
    prob.add_row(Vector{{1.0, -1.0}}, Relation::Equal, 0.0);
    const auto out = lp::simplex_solve(prob);
    REQUIRE(out.optimal());
    CHECK(out.primal[0] == doctest::Approx(1.0));
    CHECK(out.primal[1] == doctest::Approx(1.0));
  }
  SUBCASE("redundant equality rows") {
    LpProblem prob(2);
    prob.objective << 1.0, 2.0;
    prob.lower.setZero();
    prob.add_row(Vector{{1.0, 1.0}}, Relation::Equal, 1.0);
    prob.add_row(Vector{{2.0, 2.0}}, Relation::Equal, 2.0);
    const auto out = lp::simplex_solve(prob);
    REQUIRE(out.optimal());
    CHECK(out.objective == doctest::Approx(1.0));
  }
}

TEST_CASE("simplex is deterministic") {
  std::mt19937_64 rng(11);
  const auto prob = testing::random_lp(rng, 12);
  const auto a = lp::simplex_solve(prob);
  const auto b = lp::simplex_solve(prob);
  REQUIRE(a.status == b.status);
  CHECK(a.iterations == b.iterations);
  CHECK(a.primal == b.primal);
}

TEST_CASE("simplex random LPs satisfy KKT") {
  std::mt19937_64 rng(20260);
  for (int t = 0; t < 100; ++t) {
    const auto prob = testing::random_lp(rng, 30);
    const auto out = lp::simplex_solve(prob);
    REQUIRE_MESSAGE(out.optimal(), "trial " << t << " status " << lp::to_string(out.status));
    const auto kkt = testing::check_kkt(prob, out.primal, out.duals);
    CHECK_MESSAGE(kkt.ok, "trial " << t << ": " << kkt.why);
    CHECK(std::abs(out.objective - out.dual_objective) <= 1e-7);
    CHECK(out.objective == doctest::Approx(kkt.dual_objective).epsilon(1e-7));
  }
}

TEST_CASE("degenerate LP terminates") {
  // Klee-Minty style cube with many ties at the origin.
  const int n = 8;
  LpProblem prob(n);
  prob.lower.setZero();
  for (int j = 0; j < n; ++j) prob.objective[j] = -std::pow(2.0, n - 1 - j);
  for (int i = 0; i < n; ++i) {
    Vector a = Vector::Zero(n);
    for (int j = 0; j < i; ++j) a[j] = std::pow(2.0, i - j + 1);
    a[i] = 1.0;
    prob.add_row(a, Relation::LessEqual, std::pow(5.0, i));
    prob.add_row(a, Relation::LessEqual, std::pow(5.0, i));  // duplicate row
  }
  const auto out = lp::simplex_solve(prob);
  REQUIRE(out.optimal());
  CHECK(out.objective == doctest::Approx(-std::pow(5.0, n - 1)));
}

TEST_CASE("min_residual") {
  const auto inf = three_column(Norm::LInf, 0.25);
  auto fit = min_residual(inf, Support{2});
  CHECK(fit.residual == doctest::Approx(0.0).scale(1.0));
  CHECK(fit.x[2] == doctest::Approx(1.0));
  CHECK(min_residual(inf, Support{0}).residual == doctest::Approx(1.0));

  // Grid search over x_1 in [-3, 3] as the independent oracle.
  const auto l1 = three_column(Norm::L1, 0.25);
  double best = kInf;
  for (int k = -3000; k <= 3000; ++k) {
    const double x1 = k * 1e-3;
    best = std::min(best, std::abs(1.0 - x1) + 1.0);
  }
  CHECK(best == doctest::Approx(1.0));
  CHECK(min_residual(l1, Support{0}).residual == doctest::Approx(best));

  CHECK(min_residual(inf, Support{}).residual == 1.0);
  CHECK(min_residual(l1, Support{}).residual == 2.0);
  CHECK_THROWS_AS(min_residual(inf, Support{5}), ContractViolation);
}

TEST_CASE("is_forbidden") {
  const auto inst = three_column(Norm::LInf, 0.25);
  CHECK(is_forbidden(inst, Support{}));
  CHECK_FALSE(is_forbidden(inst, Support{2}));
  CHECK_FALSE(is_forbidden(inst, Support{0, 1}));
}

TEST_CASE("min_residual monotone and full rank exact") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 40; ++t) {
    const Index n = 2 + t % 3;
    const Index m = n + 2;
    Matrix H(n, m);
    Vector y(n);
    for (Index i = 0; i < n; ++i) {
      y[i] = g(rng);
      for (Index j = 0; j < m; ++j) H(i, j) = g(rng);
    }
    const Instance inst(H, y, t % 2 ? Norm::L1 : Norm::LInf, 0.1);
    ResidualOracle oracle(inst);
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const auto s = Support::from_mask(mask, m);
      for (Index j = 0; j < m; ++j) {
        if (s.contains(j)) continue;
        CHECK(oracle.residual(s.with(j)) <= oracle.residual(s) + 1e-9);
      }
    }
    CHECK(oracle.residual(Support::full(m)) <= 1e-9);
    CHECK(oracle.residual(Support{}) == norm_of(inst.norm(), y));
    CHECK(oracle.max_duality_gap() <= 1e-7);
  }
}
