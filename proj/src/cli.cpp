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

#include "l0cover/cli.hpp"

#include <glob.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "l0cover/bench.hpp"
#include "l0cover/generate.hpp"
#include "l0cover/instance_io.hpp"

namespace l0cover::cli {
namespace {

namespace fs = std::filesystem;

Norm parse_norm(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "1") return Norm::L1;
  if (t == "inf") return Norm::LInf;
  throw ContractViolation("unsupported norm '" + s + "' (1 or inf)");
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t g{};
  std::vector<std::string> out;
  if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  ::globfree(&g);
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_x(const Vector& x) {
  std::string s;
  for (Index j = 0; j < x.size(); ++j) {
    if (j) s += ' ';
    s += format_double(x(j));
  }
  return s;
}

struct SolveArgs {
  std::string method = "cover";
  std::string input;
  std::optional<double> alpha;
  std::optional<std::string> p;
  std::uint64_t seed = 1;
  bool json = false;
  double time_limit = std::numeric_limits<double>::infinity();
  double big_m = 0.0;
  Index delta_max = 0;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Method method = parse_method(a.method);
  Instance inst = parse_instance(a.input);
  if (a.alpha || a.p) {
    inst = inst.with(a.p ? parse_norm(*a.p) : inst.norm(), a.alpha.value_or(inst.alpha()));
  }
  MethodOptions opts;
  opts.time_limit_s = a.time_limit;
  opts.bnc.big_m = a.big_m;
  opts.vns.delta_max = a.delta_max;
  const Solution sol = solve_with(method, inst, opts);
  const bool settled = !sol.stats.limit_hit;

  if (a.json) {
    nlohmann::ordered_json j;
    j["method"] = to_string(method);
    j["status"] = settled ? "ok" : "limit";
    j["objective"] = sol.objective;
    std::vector<Index> support;
    for (Index s : sol.support.indices()) support.push_back(s + 1);
    j["support"] = support;
    j["residual"] = sol.residual;
    j["x"] = std::vector<double>(sol.x.data(), sol.x.data() + sol.x.size());
    j["bound"] = sol.stats.lower_bound;
    j["nodes"] = sol.stats.nodes;
    j["cuts"] = sol.stats.cuts;
    j["lp_calls"] = sol.stats.lp_calls;
    j["seed"] = a.seed;
    out << j.dump() << '\n';
  } else {
    out << "method " << to_string(method) << '\n'
        << "status " << (settled ? "ok" : "limit") << '\n'
        << "objective " << sol.objective << '\n'
        << "support " << to_string(sol.support) << '\n'
        << "residual " << format_double(sol.residual) << '\n'
        << "x " << join_x(sol.x) << '\n'
        << "bound " << sol.stats.lower_bound << '\n'
        << "nodes " << sol.stats.nodes << '\n'
        << "cuts " << sol.stats.cuts << '\n'
        << "lp_calls " << sol.stats.lp_calls << '\n';
  }
  return settled ? kOk : kLimit;
}

struct GenArgs {
  std::string kind = "gaussian";
  Index n = 4, m = 8, k = 2;
  double noise = 0.0, margin = 0.1, epsilon = 0.05;
  std::string p = "1";
  std::uint64_t seed = 1;
  std::string output;
  std::string suite;
  int count = 60;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int do_gen(const GenArgs& a, std::ostream& out) {
  if (!a.suite.empty()) {
    fs::create_directories(a.suite);
    for (const auto& named : standard_suite(a.count, a.seed)) {
      const fs::path path = fs::path(a.suite) / (named.name + ".txt");
      write_instance(path, named.instance);
      out << path.string() << '\n';
    }
    return kOk;
  }
  GeneratorParams params;
  params.kind = parse_generator_kind(a.kind);
  params.n = a.n;
  params.m = a.m;
  params.k = a.k;
  params.noise = a.noise;
  params.margin = a.margin;
  params.epsilon = a.epsilon;
  params.p = parse_norm(a.p);
  params.seed = a.seed;
  const GeneratedInstance gen = generate_instance(params);
  if (a.output.empty()) {
    out << format_instance(gen.instance);
    return kOk;
  }
  write_instance(a.output, gen.instance);
  write_text(a.output + ".support", to_string(gen.planted) + '\n');
  out << a.output << '\n';
  return kOk;
}

struct BenchArgs {
  std::string methods = "brute,cover,bnc,vns";
  std::string instances;
  std::string suite_seed;
  int count = 60;
  bool table = false;
  bool no_millis = false;
  double time_limit = std::numeric_limits<double>::infinity();
};

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto methods = parse_method_list(a.methods);
  std::vector<NamedInstance> instances;
  if (!a.instances.empty()) {
    for (const auto& path : expand_glob(a.instances)) {
      instances.push_back({fs::path(path).stem().string(), parse_instance(path)});
    }
    if (instances.empty()) {
      err << "error: no files match '" << a.instances << "'\n";
      return kUsage;
    }
  } else if (!a.suite_seed.empty()) {
    instances = standard_suite(a.count, std::stoull(a.suite_seed));
  } else {
    err << "error: bench needs --instances GLOB or --suite SEED\n";
    return kUsage;
  }
  MethodOptions opts;
  opts.time_limit_s = a.time_limit;
  const auto records = run_bench(instances, methods, opts);
  if (a.table) {
    out << format_table(records);
  } else {
    for (const auto& r : records) out << to_json_line(r, !a.no_millis) << '\n';
  }
  const auto problems = consistency_errors(records);
  for (const auto& p : problems) err << "inconsistent: " << p << '\n';
  if (!problems.empty()) return kBenchDisagreement;
  const bool limited = std::any_of(records.begin(), records.end(), [](const BenchRecord& r) {
    return r.status == CellStatus::Limit;
  });
  return limited ? kLimit : kOk;
}

int do_check(const std::string& input, const std::string& solution, std::ostream& out) {
  const Instance inst = parse_instance(input);
  const Vector x = parse_solution(solution);
  if (x.size() != inst.cols()) {
    out << "invalid length " << x.size() << " expected " << inst.cols() << '\n';
    return kInvalidSolution;
  }
  const Tolerances tol;
  const double r = residual_norm(inst, x);
  const bool ok = r <= inst.alpha() + tol.feas_tol;
  out << (ok ? "valid" : "invalid") << '\n'
      << "objective " << support_of(x, tol).size() << '\n'
      << "residual " << format_double(r) << '\n'
      << "alpha " << format_double(inst.alpha()) << '\n';
  return ok ? kOk : kInvalidSolution;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-support sparse approximation under an l1 or l-inf threshold"};
  app.name("l0cover");
  app.require_subcommand(1, 1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--method", sa.method, "bnc, cover, vns or brute")->capture_default_str();
  solve->add_option("--input", sa.input, "Instance file")->required();
  solve->add_option("--alpha", sa.alpha, "Override the threshold");
  solve->add_option("--p", sa.p, "Override the norm: 1 or inf");
  solve->add_option("--seed", sa.seed, "Recorded in JSON output; solvers are deterministic");
  solve->add_flag("--json", sa.json, "Print one JSON object");
  solve->add_option("--time-limit", sa.time_limit, "Seconds");
  solve->add_option("--big-m", sa.big_m, "Fixed big-M for bnc (0 = automatic)");
  solve->add_option("--delta-max", sa.delta_max, "Largest VNS radius (0 = min(m, 10))");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("--kind", ga.kind, "gaussian or correlated")->capture_default_str();
  gen->add_option("--n", ga.n)->capture_default_str();
  gen->add_option("--m", ga.m)->capture_default_str();
  gen->add_option("--k", ga.k, "Planted support size")->capture_default_str();
  gen->add_option("--noise", ga.noise, "Noise standard deviation")->capture_default_str();
  gen->add_option("--margin", ga.margin)->capture_default_str();
  gen->add_option("--epsilon", ga.epsilon, "Perturbation of correlated columns")
      ->capture_default_str();
  gen->add_option("--p", ga.p, "1 or inf")->capture_default_str();
  gen->add_option("--seed", ga.seed)->capture_default_str();
  gen->add_option("--output", ga.output, "Instance file; FILE.support gets the planted support");
  gen->add_option("--suite", ga.suite, "Write the standard suite into this directory");
  gen->add_option("--count", ga.count, "Suite size")->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compare methods on many instances");
  bench->add_option("--methods", ba.methods, "Comma-separated list")->capture_default_str();
  bench->add_option("--instances", ba.instances, "Glob of instance files");
  bench->add_option("--suite", ba.suite_seed, "Use the in-memory standard suite with this seed");
  bench->add_option("--count", ba.count, "Suite size")->capture_default_str();
  bench->add_flag("--table", ba.table, "Human-readable table instead of JSON lines");
  bench->add_flag("--no-millis", ba.no_millis, "Omit timings from JSON lines");
  bench->add_option("--time-limit", ba.time_limit, "Seconds per solve");

  std::string check_input, check_solution;
  auto* check = app.add_subcommand("check", "Validate a claimed solution");
  check->add_option("--input", check_input)->required();
  check->add_option("--solution", check_solution)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve) return do_solve(sa, out);
    if (*gen) return do_gen(ga, out);
    if (*bench) return do_bench(ba, out, err);
    if (*check) return do_check(check_input, check_solution, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ProblemInfeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace l0cover::cli
