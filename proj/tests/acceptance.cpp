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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "l0cover/bench.hpp"
#include "l0cover/bnc.hpp"
#include "l0cover/brute_force.hpp"
#include "l0cover/covering.hpp"
#include "l0cover/cuts.hpp"
#include "l0cover/generate.hpp"
#include "l0cover/heuristic.hpp"
#include "l0cover/lp.hpp"
#include "support/lp_oracle.hpp"

using namespace l0cover;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr int kSuiteSize = 60;

struct Run {
  explicit Run(NamedInstance n) : named(std::move(n)) {}
  NamedInstance named;
  std::unique_ptr<SupportTable> table;
  Index optimum = 0;
  TwoStageTrace cover;
  BncTrace bnc;
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& why) {
    if (failures++ < 5) detail << "\n      " << why;
    pass = false;
  }
};

int g_failed = 0;

void report(int id, const std::string& title, Outcome& o, double seconds) {
  std::printf("%s  %2d  %-34s %7.1fs  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failed;
}

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(id, title, o, s);
}

Vector indicator(std::uint64_t mask, Index m) {
  Vector b = Vector::Zero(m);
  for (Index j = 0; j < m; ++j) {
    if (mask >> j & 1U) b[j] = 1.0;
  }
  return b;
}

std::vector<Support> certified_forbidden(const Run& run) {
  std::set<Support> all;
  for (const auto& s : run.cover.pool.forbidden_history()) all.insert(s);
  for (const auto& s : run.bnc.pool.forbidden_history()) all.insert(s);
  return {all.begin(), all.end()};
}

Instance big_coefficient_instance() {
  Matrix H(2, 3);
  H << 1, 1, 1,
       0, 1, -1;
  Vector y(2);
  y << 10, 0;
  return Instance(H, y, Norm::L1, 0.0);
}

}  // namespace

int main() {
  const auto suite = standard_suite(kSuiteSize, kSeed);
  const std::vector<Method> exact = {Method::Brute, Method::Cover, Method::Bnc};
  std::vector<BenchRecord> first_records;
  std::vector<Run> runs;

  criterion(1, "cross-method exactness", [&](Outcome& o) {
    first_records = run_bench(suite, exact);
    for (const auto& r : first_records) {
      if (r.status != CellStatus::Ok) o.fail(r.instance + " " + to_string(r.method) + ": " +
                                             to_string(r.status) + " " + r.error);
      if (!r.feasible) o.fail(r.instance + " " + to_string(r.method) + ": infeasible x");
    }
    for (const auto& e : consistency_errors(first_records)) o.fail(e);
    // Traced pass feeding the cut, extension, LP and big-M criteria.
    for (const auto& named : suite) {
      Run run(named);
      run.table = std::make_unique<SupportTable>(named.instance);
      run.optimum = brute_force_solve(named.instance).objective;
      const Index c = solve_two_stage(named.instance, {}, &run.cover).objective;
      const Index b = solve_branch_and_cut(named.instance, {}, &run.bnc).objective;
      if (c != run.optimum || b != run.optimum) {
        o.fail(named.name + ": traced objectives differ from brute force");
      }
      runs.push_back(std::move(run));
    }
    std::int64_t total = 0;
    for (const auto& r : runs) total += r.optimum;
    o.detail << kSuiteSize << " instances x {brute, cover, bnc}, sum of optima " << total;
  });

  criterion(2, "covering description is exact", [&](Outcome& o) {
    int used = 0;
    std::int64_t vectors = 0, forbidden_total = 0;
    for (const auto& named : standard_suite(3 * kSuiteSize, kSeed + 1)) {
      const Instance& inst = named.instance;
      const Index m = inst.cols();
      if (m > 10) continue;
      const SupportTable table(inst);
      const std::uint64_t masks = std::uint64_t{1} << m;
      std::vector<CoverInequality> cuts;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (!table.feasible(mask)) cuts.push_back(forbidden_support_cut(Support::from_mask(mask, m), m));
      }
      forbidden_total += static_cast<std::int64_t>(cuts.size());
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const Vector b = indicator(mask, m);
        const bool covered = std::all_of(cuts.begin(), cuts.end(),
                                         [&](const CoverInequality& c) { return c.satisfied_by(b); });
        if (covered != table.feasible(mask)) {
          o.fail(named.name + ": mismatch at " + to_string(Support::from_mask(mask, m)));
        }
        ++vectors;
      }
      if (++used == 20) break;
    }
    if (used < 20) o.fail("only " + std::to_string(used) + " instances with m <= 10");
    o.detail << used << " instances, " << vectors << " binary vectors, " << forbidden_total
             << " forbidden supports, " << o.failures << " mismatches";
  });

  criterion(3, "every emitted cut is valid", [&](Outcome& o) {
    std::int64_t checked = 0;
    for (const auto& run : runs) {
      for (const auto* pool : {&run.cover.pool, &run.bnc.pool}) {
        for (const auto& cut : pool->cuts()) {
          ++checked;
          if (!cut_is_valid(cut, *run.table)) o.fail(run.named.name + ": " + to_string(cut));
        }
      }
    }
    if (checked == 0) o.fail("no cuts were emitted");
    o.detail << checked << " cuts, " << o.failures << " violations";
  });

  criterion(4, "family cuts are valid", [&](Outcome& o) {
    std::vector<std::pair<const Run*, std::vector<Support>>> sources;
    for (const auto& run : runs) {
      if (run.named.instance.cols() > 10) continue;
      auto forb = certified_forbidden(run);
      if (forb.size() >= 2) sources.emplace_back(&run, std::move(forb));
    }
    if (sources.empty()) {
      o.fail("no instance produced two forbidden supports");
      return;
    }
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 200; ++t) {
      const auto& [run, forb] = sources[rng() % sources.size()];
      const std::size_t size = 2 + rng() % std::min<std::size_t>(3, forb.size() - 1);
      std::vector<Support> family;
      std::sample(forb.begin(), forb.end(), std::back_inserter(family), size, rng);
      for (const auto& j : family) {
        if (run->table->feasible(j)) o.fail(run->named.name + ": " + to_string(j) + " not forbidden");
      }
      const auto cut = family_cut(family, run->named.instance.cols());
      if (!cut_is_valid(cut, *run->table)) o.fail(run->named.name + ": " + to_string(cut));
    }
    o.detail << "200 families from " << sources.size() << " instances, " << o.failures
             << " violations";
  });

  criterion(5, "LP engine certification", [&](Outcome& o) {
    std::mt19937_64 rng(kSeed);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const auto prob = testing::random_lp(rng, 30);
      const auto out = lp::simplex_solve(prob);
      if (!out.optimal()) {
        o.fail("random LP " + std::to_string(t) + ": " + lp::to_string(out.status));
        continue;
      }
      const auto kkt = testing::check_kkt(prob, out.primal, out.duals);
      if (!kkt.ok) o.fail("random LP " + std::to_string(t) + ": " + kkt.why);
      worst = std::max(worst, std::abs(out.objective - out.dual_objective));
    }
    for (const auto& run : runs) {
      worst = std::max({worst, run.cover.max_duality_gap, run.bnc.max_duality_gap});
    }
    if (worst > 1e-7) o.fail("duality gap " + std::to_string(worst));

    // Analytic cases.
    lp::LpProblem<double> bound(1);
    bound.objective[0] = 1.0;
    bound.add_row(Vector::Ones(1), lp::Relation::GreaterEqual, 3.0);
    const auto b = lp::simplex_solve(bound);
    if (!b.optimal() || std::abs(b.objective - 3.0) > 1e-9 || std::abs(b.primal[0] - 3.0) > 1e-9)
      o.fail("min x s.t. x >= 3");
    lp::LpProblem<double> clash(1);
    clash.add_row(Vector::Ones(1), lp::Relation::LessEqual, 1.0);
    clash.add_row(Vector::Ones(1), lp::Relation::GreaterEqual, 2.0);
    if (lp::simplex_solve(clash).status != lp::LpStatus::Infeasible) o.fail("x <= 1, x >= 2");
    lp::LpProblem<double> ray(1);
    ray.objective[0] = -1.0;
    ray.lower[0] = 0.0;
    if (lp::simplex_solve(ray).status != lp::LpStatus::Unbounded) o.fail("min -x, x >= 0");

    Matrix H(2, 3);
    H << 1, 0, 1,
         0, 1, 1;
    const Instance linf(H, Vector::Ones(2), Norm::LInf, 0.25);
    const Instance l1 = linf.with(Norm::L1, 0.25);
    const auto s3 = min_residual(linf, Support{2});
    if (std::abs(s3.residual) > 1e-9 || std::abs(s3.x[2] - 1.0) > 1e-9) o.fail("S = {3}");
    if (std::abs(min_residual(linf, Support{0}).residual - 1.0) > 1e-9) o.fail("S = {1}, inf");
    if (std::abs(min_residual(l1, Support{0}).residual - 1.0) > 1e-9) o.fail("S = {1}, 1");
    if (min_residual(l1, Support{}).residual != 2.0) o.fail("empty support");
    o.detail << "200 random LPs + min_residual calls, worst gap " << worst;
  });

  criterion(6, "monotonicity and down-closure", [&](Outcome& o) {
    std::mt19937_64 rng(kSeed + 6);
    std::bernoulli_distribution coin(0.3);
    for (int t = 0; t < 500; ++t) {
      const Instance& inst = suite[rng() % suite.size()].instance;
      std::vector<Index> small, large;
      for (Index j = 0; j < inst.cols(); ++j) {
        const bool in_small = coin(rng);
        if (in_small) small.push_back(j);
        if (in_small || coin(rng)) large.push_back(j);
      }
      const Support s(small), sp(large);
      const double rs = min_residual(inst, s).residual;
      const double rsp = min_residual(inst, sp).residual;
      if (rsp > rs + 1e-9) o.fail(to_string(s) + " vs " + to_string(sp));
    }
    int enumerated = 0;
    for (const auto& run : runs) {
      const Index m = run.named.instance.cols();
      if (m > 10) continue;
      ++enumerated;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (!run.table->feasible(mask)) continue;
        for (Index j = 0; j < m; ++j) {
          if (!run.table->feasible(mask | (std::uint64_t{1} << j))) {
            o.fail(run.named.name + ": superset of feasible " +
                   to_string(Support::from_mask(mask, m)) + " is forbidden");
          }
        }
      }
    }
    o.detail << "500 pairs, " << enumerated << " full enumerations, " << o.failures
             << " failures";
  });

  criterion(7, "maximal extensions", [&](Outcome& o) {
    std::int64_t checked = 0;
    for (const auto& run : runs) {
      const Instance& inst = run.named.instance;
      std::vector<Support> maximal = certified_forbidden(run);
      for (const auto& [j, jp] : run.cover.extensions) {
        if (!j.is_subset_of(jp)) o.fail(run.named.name + ": extension dropped columns");
        maximal.push_back(jp);
      }
      for (const auto& jp : maximal) {
        ++checked;
        if (!is_forbidden(inst, jp)) o.fail(run.named.name + ": " + to_string(jp) + " feasible");
        for (Index c = 0; c < inst.cols(); ++c) {
          if (!jp.contains(c) && is_forbidden(inst, jp.with(c))) {
            o.fail(run.named.name + ": " + to_string(jp) + " not maximal");
          }
        }
      }
    }
    o.detail << checked << " extensions re-certified, " << o.failures << " failures";
  });

  criterion(8, "VNS sandwich and exact radius", [&](Outcome& o) {
    for (const auto& run : runs) {
      const Instance& inst = run.named.instance;
      VnsTrace trace;
      const Solution sol = vns_solve(inst, {}, &trace);
      if (!is_feasible(inst, sol.x)) o.fail(run.named.name + ": infeasible");
      if (sol.objective < run.optimum || sol.objective > trace.initial_objective) {
        o.fail(run.named.name + ": " + std::to_string(sol.objective) + " outside [" +
               std::to_string(run.optimum) + ", " + std::to_string(trace.initial_objective) + "]");
      }
      VnsConfig full;
      full.delta_max = inst.cols();
      full.neighborhood = NeighborhoodBudget::unlimited();
      const Solution best = vns_solve(inst, full);
      if (best.objective != run.optimum || best.stats.limit_hit) {
        o.fail(run.named.name + ": full radius gave " + std::to_string(best.objective));
      }
    }
    o.detail << runs.size() << " instances, default and full radius";
  });

  criterion(9, "big-M guard", [&](Outcome& o) {
    std::int64_t incumbents = 0;
    for (const auto& run : runs) {
      const double final_m = run.bnc.big_m_history.back();
      for (const auto& inc : run.bnc.incumbents) {
        if (inc.big_m != final_m) continue;
        ++incumbents;
        if (inc.max_abs_x > 0.99 * inc.big_m) o.fail(run.named.name + ": incumbent at the bound");
      }
    }
    const Instance crafted = big_coefficient_instance();
    const Solution oracle = brute_force_solve(crafted);
    const double x_inf = oracle.x.cwiseAbs().maxCoeff();
    BncConfig cfg;
    cfg.big_m = 0.5 * x_inf;
    BncTrace trace;
    const Solution sol = solve_branch_and_cut(crafted, cfg, &trace);
    if (trace.big_m_history.size() < 2) o.fail("undersized M was not doubled");
    if (sol.objective != oracle.objective) o.fail("undersized M changed the objective");
    for (const auto& inc : trace.incumbents) {
      if (inc.big_m == trace.big_m_history.back() && inc.max_abs_x > 0.99 * inc.big_m) {
        o.fail("crafted incumbent at the bound");
      }
    }
    o.detail << incumbents << " incumbents; crafted M " << cfg.big_m << " -> "
             << trace.big_m_history.back() << ", objective " << sol.objective;
  });

  criterion(10, "bench determinism", [&](Outcome& o) {
    const auto again = run_bench(suite, exact);
    if (again.size() != first_records.size()) {
      o.fail("record count differs");
      return;
    }
    for (std::size_t i = 0; i < again.size(); ++i) {
      if (to_json_line(again[i], false) != to_json_line(first_records[i], false)) {
        o.fail("record " + std::to_string(i) + " differs: " + to_json_line(again[i], false));
      }
    }
    o.detail << again.size() << " records compared";
  });

  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
