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

#include "l0cover/bnc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace l0cover {

namespace {

using Clock = std::chrono::steady_clock;

struct BncNode {
  Vector lower;
  Vector upper;
  double bound = 0.0;
  int depth = 0;
  std::int64_t id = 0;
};

Index ceil_bound(double value, double tol) {
  return static_cast<Index>(std::ceil(value - tol));
}

/// Outcome of one branch-and-cut pass at a fixed M.
struct Pass {
  bool suspect = false;
  std::string why;
  bool has_incumbent = false;
  Vector x;
  Index objective = 0;
  Index lower_bound = 0;
  bool limit_hit = false;
  std::int64_t nodes = 0;
};

Pass run_pass(MipModel& model, ResidualOracle& oracle, const BncConfig& cfg,
              Clock::time_point start, std::int64_t node_budget, BncTrace* trace) {
  const Instance& inst = model.instance();
  const Index m = inst.cols();
  const double guard = (1.0 - cfg.m_guard) * model.big_m();
  Pass pass;
  Index incumbent = m + 1;

  std::vector<BncNode> open;
  std::int64_t next_id = 0;
  open.push_back({Vector::Zero(m), Vector::Ones(m), 0.0, 0, next_id++});
  int plunge_left = 0;

  auto select = [&]() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < open.size(); ++k) {
      const auto& a = open[k];
      const auto& b = open[best];
      bool better;
      if (plunge_left > 0) {
        better = a.depth != b.depth ? a.depth > b.depth
                 : a.bound != b.bound ? a.bound < b.bound
                                      : a.id > b.id;
      } else {
        better = a.bound != b.bound ? a.bound < b.bound
                 : a.depth != b.depth ? a.depth > b.depth
                                      : a.id > b.id;
      }
      if (better) best = k;
    }
    BncNode node = std::move(open[best]);
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(best));
    if (plunge_left > 0) --plunge_left;
    return node;
  };

  while (!open.empty()) {
    if (pass.nodes >= node_budget ||
        std::chrono::duration<double>(Clock::now() - start).count() > cfg.time_limit_s) {
      pass.limit_hit = true;
      break;
    }
    BncNode node = select();
    if (ceil_bound(node.bound, cfg.int_tol) >= incumbent) continue;
    ++pass.nodes;

    BncNodeRecord rec;
    rec.id = node.id;
    rec.depth = node.depth;

    LpOutcome out;
    Vector b;
    for (int round = 0;; ++round) {
      out = solve_relaxation(model, node.lower, node.upper);
      if (out.status == lp::LpStatus::NumericalFailure) {
        throw NumericalFailure("branch-and-cut node relaxation could not be certified");
      }
      if (trace && out.optimal()) {
        trace->max_duality_gap =
            std::max(trace->max_duality_gap, std::abs(out.objective - out.dual_objective));
      }
      if (!out.optimal()) break;
      b = out.primal.head(m);
      if (!cfg.use_cuts || round >= cfg.max_cut_rounds) break;
      bool fractional = false;
      for (Index j = 0; j < m; ++j) {
        if (std::min(b[j], 1.0 - b[j]) > cfg.int_tol) fractional = true;
      }
      if (!fractional) break;
      SeparationOptions sep;
      sep.family_cuts = cfg.family_cuts;
      int added = 0;
      for (const auto& cut : separate(b, oracle, model.pool(), sep)) {
        if (model.pool().add(cut)) ++added;
      }
      rec.cuts_added += added;
      if (added == 0) break;
    }

    if (!out.optimal()) {
      if (node.depth == 0) {
        // The full support is feasible, so an infeasible root means M is too small.
        pass.suspect = true;
        pass.why = "root relaxation infeasible";
        return pass;
      }
      if (trace) trace->nodes.push_back(rec);
      continue;
    }
    node.bound = std::max(node.bound, out.objective);
    rec.bound = node.bound;

    Index branch = -1;
    double best_frac = cfg.int_tol;
    for (Index j = 0; j < m; ++j) {
      const double frac = std::min(b[j], 1.0 - b[j]);
      if (frac > cfg.int_tol) ++rec.fractional;
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        branch = j;
      }
    }
    if (trace) trace->nodes.push_back(rec);
    if (ceil_bound(node.bound, cfg.int_tol) >= incumbent) continue;

    if (branch < 0) {
      Vector x(m);
      for (Index j = 0; j < m; ++j) x[j] = out.primal[model.x_col(j)];
      const double max_abs = x.lpNorm<Eigen::Infinity>();
      const Index size = support_of(x, oracle.tolerances()).size();
      if (trace) trace->incumbents.push_back({size, max_abs, model.big_m()});
      if (max_abs > guard) {
        std::ostringstream os;
        os << "incumbent has max |x_j| = " << max_abs << " above " << guard;
        pass.suspect = true;
        pass.why = os.str();
        return pass;
      }
      if (size < incumbent && is_feasible(inst, x, oracle.tolerances())) {
        incumbent = size;
        pass.x = x;
        pass.objective = size;
        pass.has_incumbent = true;
        plunge_left = cfg.plunge_nodes;
      }
      continue;
    }

    BncNode down = node, up = node;
    down.upper[branch] = 0.0;
    up.lower[branch] = 1.0;
    down.depth = up.depth = node.depth + 1;
    down.id = next_id++;
    up.id = next_id++;
    open.push_back(std::move(down));
    open.push_back(std::move(up));
  }

  if (pass.limit_hit) {
    double floor = std::numeric_limits<double>::infinity();
    for (const auto& n : open) floor = std::min(floor, n.bound);
    pass.lower_bound = std::min(incumbent, ceil_bound(floor, cfg.int_tol));
  } else {
    pass.lower_bound = pass.has_incumbent ? incumbent : 0;
    if (!pass.has_incumbent) {
      pass.suspect = true;
      pass.why = "no integral point although the full support is feasible";
    }
  }
  return pass;
}

}  // namespace

MipModel::MipModel(const Instance& inst, double big_m)
    : inst_(inst), big_m_(big_m), m_(inst.cols()),
      nw_(inst.norm() == Norm::L1 ? inst.rows() : 1) {
  if (!(big_m > 0.0) || !std::isfinite(big_m)) {
    throw ContractViolation("big-M must be positive and finite");
  }
  const Index n = inst.rows();
  const Index vars = 2 * m_ + nw_;
  base_ = LpProblem(vars);
  base_.objective.head(m_).setOnes();
  base_.lower.head(m_).setZero();
  base_.upper.head(m_).setOnes();
  base_.lower.tail(nw_).setZero();

  Vector row(vars);
  for (Index j = 0; j < m_; ++j) {
    row.setZero();
    row[x_col(j)] = 1.0;
    row[b_col(j)] = -big_m;
    base_.add_row(row, lp::Relation::LessEqual, 0.0);
    row[b_col(j)] = big_m;
    base_.add_row(row, lp::Relation::GreaterEqual, 0.0);
  }
  const Matrix& H = inst.dictionary();
  for (Index i = 0; i < n; ++i) {
    row.setZero();
    for (Index j = 0; j < m_; ++j) row[x_col(j)] = H(i, j);
    const Index w = w_col(inst.norm() == Norm::L1 ? i : 0);
    row[w] = 1.0;
    base_.add_row(row, lp::Relation::GreaterEqual, inst.observation()[i]);
    row[w] = -1.0;
    base_.add_row(row, lp::Relation::LessEqual, inst.observation()[i]);
  }
  row.setZero();
  row.tail(nw_).setOnes();
  base_.add_row(row, lp::Relation::LessEqual, inst.alpha());
}

MipModel build_mip(const Instance& inst, double big_m) { return MipModel(inst, big_m); }

double choose_big_M(const Instance& inst, double safety, const Tolerances& tol) {
  if (!(safety > 0.0)) throw ContractViolation("big-M safety factor must be positive");
  const auto fit = min_residual(inst, Support::full(inst.cols()));
  if (fit.residual > inst.alpha() + tol.feas_tol) {
    throw ProblemInfeasible("full support residual exceeds the threshold");
  }
  const double scale = std::max(fit.x.lpNorm<Eigen::Infinity>(),
                                inst.observation().lpNorm<Eigen::Infinity>());
  return scale > 0.0 ? safety * scale : 1.0;
}

LpOutcome solve_relaxation(const MipModel& model, const Vector& b_lower, const Vector& b_upper) {
  const Index m = model.num_binaries();
  if (b_lower.size() != m || b_upper.size() != m) {
    throw ContractViolation("solve_relaxation: fixings must have one entry per column");
  }
  LpProblem prob = model.base();
  for (Index j = 0; j < m; ++j) {
    if (b_lower[j] < 0.0 || b_upper[j] > 1.0 || b_lower[j] > b_upper[j]) {
      throw ContractViolation("solve_relaxation: fixing outside [0, 1]");
    }
    prob.lower[model.b_col(j)] = b_lower[j];
    prob.upper[model.b_col(j)] = b_upper[j];
  }
  const Index vars = prob.num_vars();
  Vector row(vars);
  for (const auto& cut : model.pool().cuts()) {
    row.setZero();
    row.head(m) = cut.coefficients(m);
    prob.add_row(row, lp::Relation::GreaterEqual, cut.rhs);
  }
  return lp::simplex_solve(prob);
}

Solution solve_branch_and_cut(const Instance& inst, const BncConfig& config, BncTrace* trace) {
  const auto start = Clock::now();
  ResidualOracle oracle(inst, config.tol);
  if (oracle.forbidden(Support::full(inst.cols()))) {
    throw ProblemInfeasible("full support residual exceeds the threshold");
  }
  double big_m = config.big_m > 0.0 ? config.big_m
                                    : choose_big_M(inst, config.safety, config.tol);
  CutPool pool;
  std::int64_t nodes = 0;

  for (int attempt = 0;; ++attempt) {
    MipModel model(inst, big_m);
    model.pool() = pool;
    if (trace) trace->big_m_history.push_back(big_m);
    const Pass pass = run_pass(model, oracle, config, start, config.max_nodes - nodes, trace);
    nodes += pass.nodes;
    pool = model.pool();

    if (pass.suspect) {
      std::ostringstream os;
      os << "big-M " << big_m << " looks undersized: " << pass.why;
      if (attempt >= config.max_big_m_doublings) throw BigMSuspect(os.str());
      os << "; doubling and re-solving";
      if (trace) trace->warnings.push_back(os.str());
      big_m *= 2.0;
      continue;
    }

    Solution sol = pass.has_incumbent
                       ? make_solution(inst, pass.x, config.tol)
                       : make_solution(inst, min_residual(inst, Support::full(inst.cols())).x,
                                       config.tol);
    sol.stats.nodes = nodes;
    sol.stats.cuts = static_cast<std::int64_t>(pool.size());
    sol.stats.lp_calls = oracle.lp_calls();
    sol.stats.lower_bound = pass.lower_bound;
    sol.stats.limit_hit = pass.limit_hit;
    sol.stats.iterations = attempt + 1;
    if (trace) trace->pool = pool;
    return sol;
  }
}

}  // namespace l0cover
