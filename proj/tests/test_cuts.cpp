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

#include <random>

#include "l0cover/cuts.hpp"

using namespace l0cover;

namespace {

Instance three_column(Norm p = Norm::LInf, double alpha = 0.25) {
  Matrix H(2, 3);
  H << 1, 0, 1,
       0, 1, 1;
  return Instance(H, Vector::Ones(2), p, alpha);
}

Instance random_instance(std::mt19937_64& rng, Index n, Index m) {
  std::normal_distribution<double> g;
  Matrix H(n, m);
  Vector y(n);
  for (Index i = 0; i < n; ++i) {
    y[i] = g(rng);
    for (Index j = 0; j < m; ++j) H(i, j) = g(rng);
  }
  const Norm p = rng() % 2 ? Norm::L1 : Norm::LInf;
  // Threshold between zero and ||y|| so that some supports are forbidden.
  const double alpha = 0.3 * norm_of(p, y);
  return Instance(H, y, p, alpha);
}

}  // namespace

TEST_CASE("running instance classification") {
  // Hand classification: only the empty set and the two unit columns miss y.
  const SupportTable table(three_column());
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const bool forbidden = mask == 0 || mask == 0b001 || mask == 0b010;
    CHECK_MESSAGE(table.feasible(mask) == !forbidden, "mask " << mask);
  }
}

TEST_CASE("forbidden_support_cut") {
  CHECK(to_string(forbidden_support_cut(Support{}, 3)) == "b1 + b2 + b3 >= 1");
  CHECK(to_string(forbidden_support_cut(Support{0}, 3)) == "b2 + b3 >= 1");
  CHECK(to_string(forbidden_support_cut(Support{0, 1, 2}, 4)) == "b4 >= 1");
}

TEST_CASE("family_cut") {
  auto c1 = family_cut({Support{0, 1}, Support{0, 2}}, 4);
  CHECK(c1.twos == Support{3});
  CHECK(c1.ones == Support{1, 2});
  CHECK(to_string(c1) == "2*b4 + b2 + b3 >= 2");

  auto c2 = family_cut({Support{0}}, 3);
  CHECK(c2.twos == Support{1, 2});
  CHECK(c2.ones.empty());
  CHECK(c2.canonical() == forbidden_support_cut(Support{0}, 3));

  auto c3 = family_cut({Support{0, 1}, Support{1, 2}, Support{1, 3}}, 5);
  CHECK(to_string(c3) == "2*b5 + b1 + b3 + b4 >= 2");

  CHECK_THROWS_AS(family_cut({}, 3), ContractViolation);
}

TEST_CASE("extend_to_maximal") {
  const auto inst = three_column();
  CHECK(extend_to_maximal(inst, Support{0}) == Support{0});
  const auto grown = extend_to_maximal(inst, Support{});
  CHECK((grown == Support{0} || grown == Support{1}));
  CHECK_THROWS_AS(extend_to_maximal(inst.with(Norm::LInf, 1.0), Support{}), ContractViolation);
}

TEST_CASE("separate") {
  const auto inst = three_column();
  SUBCASE("all ones point") {
    ResidualOracle oracle(inst);
    CutPool pool;
    CHECK(separate(Vector::Ones(3), oracle, pool).empty());
  }
  SUBCASE("origin") {
    ResidualOracle oracle(inst);
    CutPool pool;
    const auto cuts = separate(Vector::Zero(3), oracle, pool);
    REQUIRE(cuts.size() == 1);
    CHECK(to_string(cuts[0]) == "b2 + b3 >= 1");
  }
  SUBCASE("concentrated on column 1") {
    ResidualOracle oracle(inst);
    CutPool pool;
    const Vector b{{0.9, 0.05, 0.05}};
    const auto cuts = separate(b, oracle, pool);
    REQUIRE(cuts.size() == 1);
    CHECK(to_string(cuts[0]) == "b2 + b3 >= 1");
    CHECK(cuts[0].violation(b) == doctest::Approx(0.9));
  }
}

TEST_CASE("cut_is_valid") {
  const auto inst = three_column();
  CHECK(cut_is_valid(forbidden_support_cut(Support{0}, 3), inst));
  CHECK_FALSE(cut_is_valid(CoverInequality{Support{}, Support{2}, 1}, inst));
  CHECK_FALSE(cut_is_valid(forbidden_support_cut(Support{0}, 3), inst.with(Norm::LInf, 2.0)));

  Matrix big = Matrix::Ones(1, 25);
  CHECK_THROWS_AS(cut_is_valid(CoverInequality{}, Instance(big, Vector::Ones(1), Norm::L1, 0.0)),
                  ContractViolation);
}

TEST_CASE("cut pool deduplicates") {
  CutPool pool;
  CHECK(pool.add(forbidden_support_cut(Support{0}, 3)));
  CHECK_FALSE(pool.add(forbidden_support_cut(Support{0}, 3)));
  // Single-member family is the same cut after canonicalization.
  CHECK_FALSE(pool.add(family_cut({Support{0}}, 3)));
  CHECK(pool.size() == 1);
  CHECK(pool.violated(Vector::Zero(3), 1e-6).size() == 1);
  CHECK(pool.activity(0) == 1);
}

TEST_CASE("generated cuts are valid and extensions maximal") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 25; ++t) {
    const auto inst = random_instance(rng, 2 + t % 3, 4 + t % 5);
    const Index m = inst.cols();
    const SupportTable table(inst);
    ResidualOracle oracle(inst);
    CutPool pool;
    for (int round = 0; round < 6; ++round) {
      Vector b(m);
      for (Index j = 0; j < m; ++j) b[j] = u(rng) * 0.6;
      for (const auto& cut : separate(b, oracle, pool)) {
        CHECK_MESSAGE(cut_is_valid(cut, table), to_string(cut));
        CHECK(cut.violation(b) >= 1e-6);
        pool.add(cut);
      }
    }
    for (const auto& j : pool.forbidden_history()) {
      CHECK_FALSE(table.feasible(j));
      for (Index k = 0; k < m; ++k) {
        if (!j.contains(k)) CHECK(table.feasible(j.with(k)));
      }
    }
    // Down-closure of forbidden supports.
    const std::uint64_t count = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (table.feasible(mask)) continue;
      for (Index j = 0; j < m; ++j) {
        if (mask >> j & 1U) CHECK_FALSE(table.feasible(mask & ~(std::uint64_t{1} << j)));
      }
    }
  }
}
