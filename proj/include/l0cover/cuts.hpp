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
 * @file cuts.hpp
 * @brief Forbidden-support inequalities and their separation.
 *
 * A support J is forbidden when no x supported on J meets the threshold.
 * Every forbidden J yields the covering cut  sum_{j not in J} b_j >= 1, and
 * a family of forbidden supports yields
 *
 *     2 * sum_{j in none} b_j + sum_{j in some} b_j >= 2
 *
 * with none = [m] minus the union and some = [m] minus (none + intersection).
 * Both live in CoverInequality.
 */

#ifndef L0COVER_CUTS_HPP
#define L0COVER_CUTS_HPP

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "l0cover/lp.hpp"
#include "l0cover/model.hpp"

namespace l0cover {

struct CoverInequality {
  Support twos;
  Support ones;
  int rhs = 1;

  double lhs(const Vector& b) const;
  double violation(const Vector& b) const { return rhs - lhs(b); }
  bool satisfied_by(const Vector& b, double tol = 0.0) const { return violation(b) <= tol; }
  /// Dense coefficient row over b_1..b_m.
  Vector coefficients(Index m) const;

  /// Equivalent form used for deduplication: 2*sum_S >= 2 becomes sum_S >= 1.
  CoverInequality canonical() const;

  friend bool operator==(const CoverInequality&, const CoverInequality&) = default;
};

/// Renders e.g. "2*b4 + b2 + b3 >= 2" (1-based indices).
std::string to_string(const CoverInequality& cut);

class CutPool {
 public:
  /// Inserts the canonical form of cut; false if it was already present.
  bool add(const CoverInequality& cut);

  const std::vector<CoverInequality>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }

  /// Indices of cuts violated by b by more than tol; bumps their counters.
  std::vector<std::size_t> violated(const Vector& b, double tol);
  std::int64_t activity(std::size_t i) const { return activity_[i]; }

  /// Remembers a certified maximal forbidden support for family pairing.
  void record_forbidden(const Support& j);
  const std::deque<Support>& recent_forbidden() const { return recent_; }

  /// Every forbidden support certified into this pool, oldest first.
  const std::vector<Support>& forbidden_history() const { return history_; }

 private:
  using Key = std::tuple<std::vector<Index>, std::vector<Index>, int>;

  std::vector<CoverInequality> cuts_;
  std::vector<std::int64_t> activity_;
  std::set<Key> keys_;
  std::deque<Support> recent_;
  std::vector<Support> history_;
};

/// The covering cut of a certified forbidden support J.
CoverInequality forbidden_support_cut(const Support& j, Index m);

/**
 * @brief Grows a forbidden J until every one-column extension is feasible.
 *
 * Candidates are tried once each, in ascending order of the residual drop
 * they cause on J (ties: lower index first). Since feasibility is closed
 * under supersets, a candidate rejected early stays rejected, so one pass
 * gives a maximal set.
 */
Support extend_to_maximal(ResidualOracle& oracle, const Support& j);
Support extend_to_maximal(const Instance& inst, const Support& j, const Tolerances& tol = {});

/// Family inequality; every member must already be certified forbidden.
CoverInequality family_cut(const std::vector<Support>& family, Index m);

struct SeparationOptions {
  double violation_tol = 1e-6;
  bool family_cuts = true;
};

/**
 * @brief Heuristic separation at a fractional point.
 *
 * Returns violated pool cuts, then at most one new covering cut from a
 * greedy candidate (largest b first until the complement sums below one),
 * then a family cut pairing the two latest maximal supports that overlap.
 * Every returned cut is certified and violated by at least violation_tol.
 */
std::vector<CoverInequality> separate(const Vector& b_frac, ResidualOracle& oracle,
                                      CutPool& pool, const SeparationOptions& opts = {});

/// Feasibility of every support of a small instance, indexed by bitmask.
class SupportTable {
 public:
  static constexpr Index kMaxColumns = 24;

  SupportTable(const Instance& inst, const Tolerances& tol = {});

  Index columns() const { return m_; }
  bool feasible(std::uint64_t mask) const { return feasible_[mask]; }
  bool feasible(const Support& s) const { return feasible_[s.mask()]; }
  double residual(std::uint64_t mask) const { return residual_[mask]; }

 private:
  Index m_;
  std::vector<bool> feasible_;
  std::vector<double> residual_;
};

/// True iff the indicator of every feasible support satisfies cut.
bool cut_is_valid(const CoverInequality& cut, const SupportTable& table);
/// Brute force over all 2^m supports; refuses m > 24.
bool cut_is_valid(const CoverInequality& cut, const Instance& inst, const Tolerances& tol = {});

}  // namespace l0cover

#endif  // L0COVER_CUTS_HPP
