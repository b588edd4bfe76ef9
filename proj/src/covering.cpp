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

#include "l0cover/covering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>

namespace l0cover {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CoverNode {
  Vector lower;
  Vector upper;
  double bound = 0.0;
  int depth = 0;
  std::int64_t id = 0;
};

struct NodeOrder {
  bool operator()(const CoverNode& a, const CoverNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id < b.id;
  }
};

Index ceil_bound(double value, double tol) {
  return static_cast<Index>(std::ceil(value - tol));
}

LpProblem covering_lp(const CutPool& pool, Index m, const std::vector<LinearConstraint>& side,
                      const Vector& lower, const Vector& upper) {
  LpProblem prob(m);
  prob.objective.setOnes();
  prob.lower = lower;
  prob.upper = upper;
  for (const auto& cut : pool.cuts()) {
    prob.add_row(cut.coefficients(m), lp::Relation::GreaterEqual, cut.rhs);
  }
  for (const auto& c : side) prob.add_row(c.coeffs, c.relation, c.rhs);
  return prob;
}

bool integral_feasible(const Vector& b, const CutPool& pool,
                       const std::vector<LinearConstraint>& side) {
  for (const auto& cut : pool.cuts()) {
    if (!cut.satisfied_by(b, 1e-9)) return false;
  }
  for (const auto& c : side) {
    if (!c.satisfied_by(b)) return false;
  }
  return true;
}

/// Drops columns (highest index first) while the support stays feasible.
Support shrink_feasible(ResidualOracle& oracle, Support s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = s.indices().rbegin(); it != s.indices().rend(); ++it) {
      Support smaller = s.without(*it);
      if (!oracle.forbidden(smaller)) {
        s = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace

bool LinearConstraint::satisfied_by(const Vector& b, double tol) const {
  const double lhs = coeffs.dot(b);
  switch (relation) {
    case lp::Relation::LessEqual: return lhs <= rhs + tol;
    case lp::Relation::GreaterEqual: return lhs >= rhs - tol;
    case lp::Relation::Equal: return std::abs(lhs - rhs) <= tol;
  }
  return false;
}

CoveringIpResult solve_covering_ip(CutPool& pool, Index m, const CoveringIpOptions& opts,
                                   const std::vector<LinearConstraint>& side) {
  const auto start = Clock::now();
  CoveringIpResult res;
  Index incumbent = m + 1;

  std::priority_queue<CoverNode, std::vector<CoverNode>, NodeOrder> open;
  std::int64_t next_id = 0;
  open.push({Vector::Zero(m), Vector::Ones(m), 0.0, 0, next_id++});
  double open_bound_floor = std::numeric_limits<double>::infinity();
  bool limit = false;

  auto try_incumbent = [&](const Vector& b) {
    Vector rounded(m);
    for (Index j = 0; j < m; ++j) rounded[j] = b[j] > opts.int_tol ? 1.0 : 0.0;
    if (!integral_feasible(rounded, pool, side)) return;
    const Index size = static_cast<Index>(rounded.sum());
    if (size < incumbent) {
      incumbent = size;
      res.support = Support::from_indicator(rounded);
      res.has_incumbent = true;
    }
  };

  while (!open.empty()) {
    if (res.nodes >= opts.limits.max_nodes ||
        seconds_since(start) > opts.limits.time_limit_s) {
      limit = true;
      break;
    }
    CoverNode node = open.top();
    open.pop();
    if (ceil_bound(node.bound, opts.int_tol) >= incumbent) continue;
    ++res.nodes;

    LpOutcome out;
    Vector b;
    for (int round = 0;; ++round) {
      out = lp::simplex_solve(covering_lp(pool, m, side, node.lower, node.upper));
      ++res.lp_calls;
      if (out.status == lp::LpStatus::NumericalFailure) {
        throw NumericalFailure("covering relaxation could not be certified");
      }
      if (!out.optimal()) break;
      b = out.primal;
      if (!opts.separation_oracle || round >= opts.max_cut_rounds) break;
      bool fractional = false;
      for (Index j = 0; j < m; ++j) {
        if (std::min(b[j], 1.0 - b[j]) > opts.int_tol) fractional = true;
      }
      if (!fractional) break;
      bool added = false;
      for (const auto& cut : separate(b, *opts.separation_oracle, pool, opts.separation)) {
        added = pool.add(cut) || added;
      }
      if (!added) break;
    }
    if (!out.optimal()) continue;  // infeasible subtree

    node.bound = std::max(node.bound, out.objective);
    if (ceil_bound(node.bound, opts.int_tol) >= incumbent) continue;

    Index branch = -1;
    double best_frac = opts.int_tol;
    for (Index j = 0; j < m; ++j) {
      const double frac = std::min(b[j], 1.0 - b[j]);
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        branch = j;
      }
    }
    try_incumbent(b);
    if (branch < 0) continue;
    if (ceil_bound(node.bound, opts.int_tol) >= incumbent) continue;

    CoverNode down = node, up = node;
    down.upper[branch] = 0.0;
    up.lower[branch] = 1.0;
    down.depth = up.depth = node.depth + 1;
    down.id = next_id++;
    up.id = next_id++;
    open.push(std::move(down));
    open.push(std::move(up));
  }

  if (limit) {
    res.status = CoverStatus::LimitReached;
    while (!open.empty()) {
      open_bound_floor = std::min(open_bound_floor, open.top().bound);
      open.pop();
    }
    res.bound = std::min(incumbent, ceil_bound(open_bound_floor, opts.int_tol));
    if (!res.has_incumbent) res.bound = ceil_bound(open_bound_floor, opts.int_tol);
    return res;
  }
  if (!res.has_incumbent) {
    res.status = CoverStatus::Infeasible;
    return res;
  }
  res.status = CoverStatus::Optimal;
  res.bound = incumbent;
  return res;
}

Solution recover_x(ResidualOracle& oracle, const Support& s) {
  const auto& inst = oracle.instance();
  const auto& fit = oracle.fit(s);
  if (fit.residual > inst.alpha() + oracle.tolerances().feas_tol) {
    throw ContractViolation("recover_x: support " + to_string(s) + " is forbidden");
  }
  return make_solution(inst, fit.x, oracle.tolerances());
}

Solution recover_x(const Instance& inst, const Support& s, const Tolerances& tol) {
  ResidualOracle oracle(inst, tol);
  return recover_x(oracle, s);
}

Solution solve_two_stage(const Instance& inst, const TwoStageConfig& config,
                         TwoStageTrace* trace) {
  const auto start = Clock::now();
  const Index m = inst.cols();
  ResidualOracle oracle(inst, config.tol);
  CutPool pool;
  SolveStats stats;

  auto finish = [&](Solution sol) {
    stats.lp_calls = oracle.lp_calls();
    stats.cuts = static_cast<std::int64_t>(pool.size());
    sol.stats = stats;
    if (trace) {
      trace->pool = pool;
      trace->max_duality_gap = oracle.max_duality_gap();
    }
    return sol;
  };

  if (!oracle.forbidden(Support{})) return finish(recover_x(oracle, Support{}));
  if (oracle.forbidden(Support::full(m))) {
    throw ProblemInfeasible("every support is forbidden: even all " + std::to_string(m) +
                            " columns miss the threshold");
  }

  auto add_lazy = [&](const Support& j, TwoStageIteration* rec) {
    const Support maximal = extend_to_maximal(oracle, j);
    if (trace) trace->extensions.emplace_back(j, maximal);
    const auto cut = forbidden_support_cut(maximal, m);
    if (pool.add(cut) && rec) rec->cuts_added.push_back(to_string(cut));
    if (config.family_cuts) {
      const auto& recent = pool.recent_forbidden();
      for (auto it = recent.rbegin(); it != recent.rend(); ++it) {
        if (*it == maximal) continue;
        const bool overlap = std::any_of(maximal.begin(), maximal.end(),
                                         [&](Index k) { return it->contains(k); });
        if (!overlap) continue;
        const auto fam = family_cut({*it, maximal}, m);
        if (pool.add(fam) && rec) rec->cuts_added.push_back(to_string(fam.canonical()));
        break;
      }
    }
    pool.record_forbidden(maximal);
  };

  TwoStageIteration seed;
  add_lazy(Support{}, &seed);
  seed.forbidden = true;
  seed.pool_size = pool.size();
  if (trace) trace->iterations.push_back(seed);

  CoveringIpOptions ip = config.ip;
  if (config.separate_fractional) ip.separation_oracle = &oracle;

  for (std::int64_t it = 1;; ++it) {
    const double elapsed = seconds_since(start);
    if (it > config.max_iterations || elapsed > config.time_limit_s) {
      stats.limit_hit = true;
      break;
    }
    ip.limits.time_limit_s = std::min(config.ip.limits.time_limit_s,
                                      config.time_limit_s - elapsed);
    const auto res = solve_covering_ip(pool, m, ip);
    stats.nodes += res.nodes;
    stats.iterations = it;
    if (res.status == CoverStatus::Infeasible) {
      throw ProblemInfeasible("covering IP became infeasible");
    }
    stats.lower_bound = std::max(stats.lower_bound, res.bound);
    if (res.status == CoverStatus::LimitReached) {
      stats.limit_hit = true;
      break;
    }

    TwoStageIteration rec;
    rec.iteration = it;
    rec.ip_objective = res.support.size();
    rec.support = res.support;
    rec.nodes = res.nodes;
    rec.forbidden = oracle.forbidden(res.support);
    if (!rec.forbidden) {
      rec.pool_size = pool.size();
      if (trace) trace->iterations.push_back(rec);
      return finish(recover_x(oracle, res.support));
    }
    add_lazy(res.support, &rec);
    rec.pool_size = pool.size();
    if (trace) trace->iterations.push_back(std::move(rec));
  }

  // Limit: fall back to a pruned full support as the incumbent.
  return finish(recover_x(oracle, shrink_feasible(oracle, Support::full(m))));
}

}  // namespace l0cover
