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

#include "l0cover/cuts.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace l0cover {

namespace {

constexpr std::size_t kRecentCapacity = 16;

}  // namespace

double CoverInequality::lhs(const Vector& b) const {
  double sum = 0.0;
  for (Index j : twos) sum += 2.0 * b[j];
  for (Index j : ones) sum += b[j];
  return sum;
}

Vector CoverInequality::coefficients(Index m) const {
  Vector a = Vector::Zero(m);
  for (Index j : twos) a[j] = 2.0;
  for (Index j : ones) a[j] = 1.0;
  return a;
}

CoverInequality CoverInequality::canonical() const {
  if (rhs == 2 && ones.empty()) return {Support{}, twos, 1};
  return *this;
}

std::string to_string(const CoverInequality& cut) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](Index j, const char* coef) {
    if (!first) os << " + ";
    os << coef << 'b' << j + 1;
    first = false;
  };
  for (Index j : cut.twos) term(j, "2*");
  for (Index j : cut.ones) term(j, "");
  if (first) os << '0';
  os << " >= " << cut.rhs;
  return os.str();
}

bool CutPool::add(const CoverInequality& cut) {
  const CoverInequality c = cut.canonical();
  Key key{c.twos.indices(), c.ones.indices(), c.rhs};
  if (!keys_.insert(std::move(key)).second) return false;
  cuts_.push_back(c);
  activity_.push_back(0);
  return true;
}

std::vector<std::size_t> CutPool::violated(const Vector& b, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i].violation(b) > tol) {
      out.push_back(i);
      ++activity_[i];
    }
  }
  return out;
}

void CutPool::record_forbidden(const Support& j) {
  history_.push_back(j);
  if (std::find(recent_.begin(), recent_.end(), j) != recent_.end()) return;
  recent_.push_back(j);
  if (recent_.size() > kRecentCapacity) recent_.pop_front();
}

CoverInequality forbidden_support_cut(const Support& j, Index m) {
  return {Support{}, j.complement(m), 1};
}

Support extend_to_maximal(ResidualOracle& oracle, const Support& j) {
  const Index m = oracle.instance().cols();
  if (!oracle.forbidden(j)) {
    throw ContractViolation("extend_to_maximal: support " + to_string(j) + " is not forbidden");
  }
  const double base = oracle.residual(j);
  std::vector<std::pair<double, Index>> order;
  for (Index k = 0; k < m; ++k) {
    if (j.contains(k)) continue;
    order.emplace_back(base - oracle.residual(j.with(k)), k);
  }
  std::sort(order.begin(), order.end());

  Support current = j;
  for (const auto& [drop, k] : order) {
    const Support grown = current.with(k);
    if (oracle.forbidden(grown)) current = grown;
  }
  return current;
}

Support extend_to_maximal(const Instance& inst, const Support& j, const Tolerances& tol) {
  ResidualOracle oracle(inst, tol);
  return extend_to_maximal(oracle, j);
}

CoverInequality family_cut(const std::vector<Support>& family, Index m) {
  if (family.empty()) throw ContractViolation("family_cut: empty family");
  std::vector<int> count(static_cast<std::size_t>(m), 0);
  for (const Support& s : family) {
    for (Index j : s) {
      if (j >= m) throw ContractViolation("family_cut: index out of range");
      ++count[static_cast<std::size_t>(j)];
    }
  }
  const int members = static_cast<int>(family.size());
  std::vector<Index> none, some;
  for (Index j = 0; j < m; ++j) {
    const int c = count[static_cast<std::size_t>(j)];
    if (c == 0) none.push_back(j);
    else if (c < members) some.push_back(j);
  }
  return {Support(std::move(none)), Support(std::move(some)), 2};
}

std::vector<CoverInequality> separate(const Vector& b_frac, ResidualOracle& oracle,
                                      CutPool& pool, const SeparationOptions& opts) {
  const Index m = oracle.instance().cols();
  const double tol = opts.violation_tol;
  std::vector<CoverInequality> out;
  auto emit = [&](const CoverInequality& cut) {
    const auto canon = cut.canonical();
    if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(canon);
  };

  for (std::size_t i : pool.violated(b_frac, tol)) emit(pool.cuts()[i]);

  // Greedy candidate: take the largest b_j into J until the rest sums below one.
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return b_frac[a] > b_frac[b]; });
  double rest = b_frac.sum();
  Support candidate;
  for (Index j : order) {
    if (rest < 1.0 - tol) break;
    candidate = candidate.with(j);
    rest -= b_frac[j];
  }
  if (rest < 1.0 - tol && candidate.size() < m && oracle.forbidden(candidate)) {
    const Support maximal = extend_to_maximal(oracle, candidate);
    pool.record_forbidden(maximal);
    const auto cut = forbidden_support_cut(maximal, m);
    if (cut.violation(b_frac) >= tol) emit(cut);
  }

  if (opts.family_cuts) {
    const auto& recent = pool.recent_forbidden();
    if (recent.size() >= 2) {
      const Support& last = recent.back();
      for (auto it = recent.rbegin() + 1; it != recent.rend(); ++it) {
        const bool overlap = std::any_of(last.begin(), last.end(),
                                         [&](Index j) { return it->contains(j); });
        if (!overlap) continue;
        const auto cut = family_cut({*it, last}, m);
        if (cut.violation(b_frac) >= tol) emit(cut);
        break;
      }
    }
  }
  return out;
}

SupportTable::SupportTable(const Instance& inst, const Tolerances& tol) : m_(inst.cols()) {
  if (m_ > kMaxColumns) {
    throw ContractViolation("support enumeration refused: m = " + std::to_string(m_) +
                            " exceeds " + std::to_string(kMaxColumns));
  }
  const std::uint64_t count = std::uint64_t{1} << m_;
  feasible_.resize(count);
  residual_.resize(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const double r = min_residual(inst, Support::from_mask(mask, m_)).residual;
    residual_[mask] = r;
    feasible_[mask] = r <= inst.alpha() + tol.feas_tol;
  }
}

bool cut_is_valid(const CoverInequality& cut, const SupportTable& table) {
  const std::uint64_t count = std::uint64_t{1} << table.columns();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!table.feasible(mask)) continue;
    int lhs = 0;
    for (Index j : cut.twos) lhs += mask >> j & 1U ? 2 : 0;
    for (Index j : cut.ones) lhs += mask >> j & 1U ? 1 : 0;
    if (lhs < cut.rhs) return false;
  }
  return true;
}

bool cut_is_valid(const CoverInequality& cut, const Instance& inst, const Tolerances& tol) {
  return cut_is_valid(cut, SupportTable(inst, tol));
}

}  // namespace l0cover
