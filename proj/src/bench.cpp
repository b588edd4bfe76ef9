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

#include "l0cover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "l0cover/brute_force.hpp"
#include "l0cover/instance_io.hpp"

namespace l0cover {

std::string to_string(Method method) {
  switch (method) {
    case Method::Bnc: return "bnc";
    case Method::Cover: return "cover";
    case Method::Vns: return "vns";
    case Method::Brute: return "brute";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "bnc") return Method::Bnc;
  if (s == "cover") return Method::Cover;
  if (s == "vns") return Method::Vns;
  if (s == "brute") return Method::Brute;
  throw ContractViolation("unknown method '" + s + "' (bnc, cover, vns, brute)");
}

std::vector<Method> parse_method_list(const std::string& s) {
  std::vector<Method> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_method(item));
  }
  if (out.empty()) throw ContractViolation("empty method list");
  return out;
}

bool is_exact(Method method) { return method != Method::Vns; }

Solution solve_with(Method method, const Instance& inst, const MethodOptions& opts) {
  switch (method) {
    case Method::Bnc: {
      BncConfig cfg = opts.bnc;
      cfg.tol = opts.tol;
      cfg.time_limit_s = std::min(cfg.time_limit_s, opts.time_limit_s);
      return solve_branch_and_cut(inst, cfg);
    }
    case Method::Cover: {
      TwoStageConfig cfg = opts.cover;
      cfg.tol = opts.tol;
      cfg.time_limit_s = std::min(cfg.time_limit_s, opts.time_limit_s);
      return solve_two_stage(inst, cfg);
    }
    case Method::Vns: {
      VnsConfig cfg = opts.vns;
      cfg.tol = opts.tol;
      cfg.time_limit_s = std::min(cfg.time_limit_s, opts.time_limit_s);
      return vns_solve(inst, cfg);
    }
    case Method::Brute: return brute_force_solve(inst, opts.tol);
  }
  throw ContractViolation("unknown method");
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Ok: return "ok";
    case CellStatus::Limit: return "limit";
    case CellStatus::Infeasible: return "infeasible";
    case CellStatus::Error: return "error";
  }
  return "?";
}

BenchRecord run_cell(const NamedInstance& named, Method method, const MethodOptions& opts) {
  BenchRecord rec;
  rec.instance = named.name;
  rec.method = method;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Solution sol = solve_with(method, named.instance, opts);
    rec.status = sol.stats.limit_hit ? CellStatus::Limit : CellStatus::Ok;
    rec.objective = sol.objective;
    rec.bound = sol.stats.lower_bound;
    rec.residual = sol.residual;
    rec.feasible = is_feasible(named.instance, sol.x, opts.tol);
    rec.nodes = sol.stats.nodes;
    rec.cuts = sol.stats.cuts;
    rec.lp_calls = sol.stats.lp_calls;
  } catch (const ProblemInfeasible& e) {
    rec.status = CellStatus::Infeasible;
    rec.error = e.what();
  } catch (const std::exception& e) {
    rec.status = CellStatus::Error;
    rec.error = e.what();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<NamedInstance>& instances,
                                   const std::vector<Method>& methods,
                                   const MethodOptions& opts) {
  std::vector<BenchRecord> out;
  out.reserve(instances.size() * methods.size());
  for (const auto& inst : instances) {
    for (Method method : methods) out.push_back(run_cell(inst, method, opts));
  }
  return out;
}

std::string to_json_line(const BenchRecord& rec, bool include_millis) {
  nlohmann::ordered_json j;
  j["instance"] = rec.instance;
  j["method"] = to_string(rec.method);
  j["status"] = to_string(rec.status);
  j["objective"] = rec.objective;
  j["bound"] = rec.bound;
  j["residual"] = rec.residual;
  j["feasible"] = rec.feasible;
  j["nodes"] = rec.nodes;
  j["cuts"] = rec.cuts;
  j["lp_calls"] = rec.lp_calls;
  if (include_millis) j["millis"] = rec.millis;
  if (!rec.error.empty()) j["error"] = rec.error;
  return j.dump();
}

std::string format_table(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %-6s %-10s %4s %5s %12s %5s %8s %6s %8s %10s\n",
                "instance", "method", "status", "obj", "bound", "residual", "feas", "nodes",
                "cuts", "lp_calls", "millis");
  os << line;
  struct Agg {
    int cells = 0, ok = 0;
    std::int64_t objective = 0, nodes = 0, cuts = 0, lp_calls = 0;
    double millis = 0.0;
  };
  std::map<std::string, Agg> agg;
  std::vector<std::string> order;
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-40s %-6s %-10s %4ld %5ld %12.4g %5s %8ld %6ld %8ld %10.1f\n",
                  r.instance.c_str(), to_string(r.method).c_str(), to_string(r.status).c_str(),
                  static_cast<long>(r.objective), static_cast<long>(r.bound), r.residual,
                  r.feasible ? "yes" : "no", static_cast<long>(r.nodes),
                  static_cast<long>(r.cuts), static_cast<long>(r.lp_calls), r.millis);
    os << line;
    const auto key = to_string(r.method);
    if (!agg.count(key)) order.push_back(key);
    auto& a = agg[key];
    ++a.cells;
    if (r.status == CellStatus::Ok) ++a.ok;
    a.objective += r.objective;
    a.nodes += r.nodes;
    a.cuts += r.cuts;
    a.lp_calls += r.lp_calls;
    a.millis += r.millis;
  }
  os << '\n';
  std::snprintf(line, sizeof line, "%-8s %6s %6s %10s %10s %8s %10s %12s\n", "method", "cells",
                "solved", "sum_obj", "nodes", "cuts", "lp_calls", "millis");
  os << line;
  for (const auto& key : order) {
    const auto& a = agg[key];
    std::snprintf(line, sizeof line, "%-8s %6d %6d %10ld %10ld %8ld %10ld %12.1f\n", key.c_str(),
                  a.cells, a.ok, static_cast<long>(a.objective), static_cast<long>(a.nodes),
                  static_cast<long>(a.cuts), static_cast<long>(a.lp_calls), a.millis);
    os << line;
  }
  return os.str();
}

std::vector<std::string> consistency_errors(const std::vector<BenchRecord>& records) {
  std::vector<std::string> errors;
  std::map<std::string, std::vector<const BenchRecord*>> by_instance;
  std::vector<std::string> order;
  for (const auto& r : records) {
    if (!by_instance.count(r.instance)) order.push_back(r.instance);
    by_instance[r.instance].push_back(&r);
  }
  for (const auto& name : order) {
    const BenchRecord* ref = nullptr;
    for (const auto* r : by_instance[name]) {
      if (r->status == CellStatus::Ok && !r->feasible) {
        errors.push_back(name + ": " + to_string(r->method) + " returned an infeasible x");
      }
      if (r->status != CellStatus::Ok || !is_exact(r->method)) continue;
      if (!ref) {
        ref = r;
      } else if (r->objective != ref->objective) {
        errors.push_back(name + ": " + to_string(ref->method) + " found " +
                         std::to_string(ref->objective) + " but " + to_string(r->method) +
                         " found " + std::to_string(r->objective));
      }
    }
    if (!ref) continue;
    for (const auto* r : by_instance[name]) {
      if (r->status == CellStatus::Ok && r->objective < ref->objective) {
        errors.push_back(name + ": " + to_string(r->method) + " beat the exact optimum");
      }
    }
  }
  return errors;
}

}  // namespace l0cover
