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
 * @file bench.hpp
 * @brief Method dispatch and the benchmark harness.
 */

#ifndef L0COVER_BENCH_HPP
#define L0COVER_BENCH_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "l0cover/bnc.hpp"
#include "l0cover/covering.hpp"
#include "l0cover/generate.hpp"
#include "l0cover/heuristic.hpp"
#include "l0cover/model.hpp"

namespace l0cover {

enum class Method : std::uint8_t { Bnc, Cover, Vns, Brute };

std::string to_string(Method method);
Method parse_method(const std::string& s);
/// Comma-separated list, e.g. "brute,cover,bnc".
std::vector<Method> parse_method_list(const std::string& s);
/// bnc, cover and brute prove optimality; vns does not.
bool is_exact(Method method);

struct MethodOptions {
  Tolerances tol;
  BncConfig bnc;
  TwoStageConfig cover;
  VnsConfig vns;
  /// Per solve; applied on top of the per-method limits.
  double time_limit_s = std::numeric_limits<double>::infinity();
};

Solution solve_with(Method method, const Instance& inst, const MethodOptions& opts = {});

enum class CellStatus : std::uint8_t { Ok, Limit, Infeasible, Error };
std::string to_string(CellStatus status);

struct BenchRecord {
  std::string instance;
  Method method = Method::Cover;
  CellStatus status = CellStatus::Ok;
  Index objective = 0;
  Index bound = 0;
  double residual = 0.0;
  bool feasible = false;
  std::int64_t nodes = 0;
  std::int64_t cuts = 0;
  std::int64_t lp_calls = 0;
  double millis = 0.0;
  std::string error;
};

BenchRecord run_cell(const NamedInstance& inst, Method method, const MethodOptions& opts = {});

/// Cells ordered by (instance, method) as given.
std::vector<BenchRecord> run_bench(const std::vector<NamedInstance>& instances,
                                   const std::vector<Method>& methods,
                                   const MethodOptions& opts = {});

/// One JSON object per line with stable field names.
std::string to_json_line(const BenchRecord& rec, bool include_millis = true);

/// Per-cell table followed by one aggregate row per method.
std::string format_table(const std::vector<BenchRecord>& records);

/// Exact methods that disagree, or a heuristic beating an exact optimum.
std::vector<std::string> consistency_errors(const std::vector<BenchRecord>& records);

}  // namespace l0cover

#endif  // L0COVER_BENCH_HPP
