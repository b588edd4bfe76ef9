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

#include "l0cover/heuristic.hpp"

#include <algorithm>
#include <chrono>

namespace l0cover {

namespace {

using Clock = std::chrono::steady_clock;

void add_lazy_cut(ResidualOracle& oracle, CutPool& pool, const Support& forbidden,
                  bool family_cuts) {
  const Index m = oracle.instance().cols();
  const Support maximal = extend_to_maximal(oracle, forbidden);
  pool.add(forbidden_support_cut(maximal, m));
  if (family_cuts) {
    const auto& recent = pool.recent_forbidden();
    for (auto it = recent.rbegin(); it != recent.rend(); ++it) {
      if (*it == maximal) continue;
      if (std::none_of(maximal.begin(), maximal.end(),
                       [&](Index k) { return it->contains(k); })) {
        continue;
      }
      pool.add(family_cut({*it, maximal}, m));
      break;
    }
  }
  pool.record_forbidden(maximal);
}

}  // namespace

NeighborhoodBudget NeighborhoodBudget::unlimited() {
  NeighborhoodBudget b;
  b.max_nodes = std::numeric_limits<std::int64_t>::max();
  b.max_lazy_iterations = std::numeric_limits<std::int64_t>::max();
  return b;
}

VnsRadii resolve_radii(const VnsConfig& cfg, Index m) {
  const Index delta_max = cfg.delta_max > 0 ? cfg.delta_max : std::min<Index>(m, 10);
  const Index delta0 = cfg.delta_max > 0 ? cfg.delta0 : std::min(cfg.delta0, delta_max);
  if (delta0 < 1 || delta0 > delta_max || delta_max > m) {
    throw ContractViolation("VNS radii need 1 <= delta0 <= delta_max <= m");
  }
  if (cfg.delta_step < 1) throw ContractViolation("VNS delta_step must be >= 1");
  return {delta0, delta_max};
}

LinearConstraint local_branching_cut(const Vector& b_hat, Index delta) {
  LinearConstraint c;
  c.coeffs = Vector(b_hat.size());
  c.relation = lp::Relation::LessEqual;
  Index ones = 0;
  for (Index j = 0; j < b_hat.size(); ++j) {
    if (b_hat[j] != 0.0 && b_hat[j] != 1.0) {
      throw ContractViolation("local_branching_cut: b_hat must be binary");
    }
    const bool in = b_hat[j] == 1.0;
    c.coeffs[j] = in ? -1.0 : 1.0;
    ones += in ? 1 : 0;
  }
  if (delta < 0 || delta > b_hat.size()) {
    throw ContractViolation("local_branching_cut: radius outside [0, m]");
  }
  // sum_{J0} b + sum_{J1} (1 - b) <= delta, constants moved right.
  c.rhs = static_cast<double>(delta - ones);
  return c;
}

Support initial_solution(ResidualOracle& oracle) {
  const Index m = oracle.instance().cols();
  if (oracle.forbidden(Support::full(m))) {
    throw ProblemInfeasible("full support residual exceeds the threshold");
  }
  Support s;
  while (oracle.forbidden(s)) {
    Index best = -1;
    double best_r = 0.0;
    for (Index k = 0; k < m; ++k) {
      if (s.contains(k)) continue;
      const double r = oracle.residual(s.with(k));
      if (best < 0 || r < best_r) {
        best = k;
        best_r = r;
      }
    }
    s = s.with(best);
  }
  for (Index j : std::vector<Index>(s.indices())) {
    const Support smaller = s.without(j);
    if (!oracle.forbidden(smaller)) s = smaller;
  }
  return s;
}

Support initial_solution(const Instance& inst, const Tolerances& tol) {
  ResidualOracle oracle(inst, tol);
  return initial_solution(oracle);
}

NeighborhoodResult explore_neighborhood(ResidualOracle& oracle, CutPool& pool,
                                        const Support& incumbent, Index delta,
                                        const NeighborhoodBudget& budget, bool family_cuts) {
  const auto start = Clock::now();
  const Index m = oracle.instance().cols();
  NeighborhoodResult out;
  if (incumbent.empty()) return out;

  const std::vector<LinearConstraint> side{
      local_branching_cut(incumbent.indicator(m), delta),
      {Vector::Ones(m), lp::Relation::LessEqual, static_cast<double>(incumbent.size() - 1)}};

  CoveringIpOptions ip;
  for (std::int64_t it = 0;; ++it) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (it >= budget.max_lazy_iterations || elapsed > budget.time_limit_s ||
        out.nodes >= budget.max_nodes) {
      out.proven = false;
      return out;
    }
    ip.limits.max_nodes = budget.max_nodes - out.nodes;
    ip.limits.time_limit_s = budget.time_limit_s - elapsed;
    const auto res = solve_covering_ip(pool, m, ip, side);
    out.nodes += res.nodes;
    if (res.status == CoverStatus::Infeasible) return out;
    if (res.status == CoverStatus::LimitReached) {
      out.proven = false;
      return out;
    }
    if (!oracle.forbidden(res.support)) {
      out.improved = res.support;
      return out;
    }
    add_lazy_cut(oracle, pool, res.support, family_cuts);
  }
}

NeighborhoodResult explore_neighborhood(const Instance& inst, const Support& incumbent,
                                        Index delta, const NeighborhoodBudget& budget,
                                        const Tolerances& tol) {
  ResidualOracle oracle(inst, tol);
  CutPool pool;
  return explore_neighborhood(oracle, pool, incumbent, delta, budget);
}

Solution vns_solve(const Instance& inst, const VnsConfig& cfg, VnsTrace* trace) {
  const auto start = Clock::now();
  const Index m = inst.cols();
  const VnsRadii radii = resolve_radii(cfg, m);
  ResidualOracle oracle(inst, cfg.tol);
  CutPool pool;

  Support best = initial_solution(oracle);
  if (trace) trace->initial_objective = best.size();
  SolveStats stats;
  bool exhausted = false;
  bool settled = false;

  for (Index delta = radii.delta0; delta <= radii.delta_max && !best.empty();) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > cfg.time_limit_s) {
      exhausted = true;
      break;
    }
    NeighborhoodBudget budget = cfg.neighborhood;
    budget.time_limit_s = std::min(budget.time_limit_s, cfg.time_limit_s - elapsed);
    const auto res = explore_neighborhood(oracle, pool, best, delta, budget, cfg.family_cuts);
    stats.nodes += res.nodes;
    ++stats.iterations;
    if (trace) {
      trace->records.push_back({delta, res.improved.has_value(),
                                res.improved ? res.improved->size() : best.size(), res.proven});
    }
    if (res.improved) {
      best = *res.improved;
      delta = radii.delta0;
      continue;
    }
    settled = res.proven && delta >= m;
    delta += cfg.delta_step;
  }

  Solution sol = recover_x(oracle, best);
  stats.lp_calls = oracle.lp_calls();
  stats.cuts = static_cast<std::int64_t>(pool.size());
  stats.limit_hit = exhausted;
  // A settled radius-m ball proves optimality.
  stats.lower_bound = best.empty() || settled ? sol.objective : 0;
  sol.stats = stats;
  if (trace) trace->pool = pool;
  return sol;
}

}  // namespace l0cover
