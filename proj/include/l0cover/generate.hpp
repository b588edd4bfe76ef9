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
 * @file generate.hpp
 * @brief Seeded random instances with a planted sparse solution.
 *
 * Gaussian dictionaries have i.i.d. N(0, 1) entries with unit-norm columns.
 * Correlated dictionaries are [A | A + eps E]: the first ceil(m/2) columns
 * are a Gaussian A, each later column t copies column t of A plus eps times
 * Gaussian noise, so near-duplicate atoms compete for the same role.
 */

#ifndef L0COVER_GENERATE_HPP
#define L0COVER_GENERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "l0cover/model.hpp"

namespace l0cover {

enum class GeneratorKind : std::uint8_t { Gaussian, Correlated };

std::string to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& s);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::Gaussian;
  Index n = 4;
  Index m = 8;
  Index k = 2;
  /// Standard deviation of the additive observation noise.
  double noise = 0.0;
  /// alpha = (1 + margin) * ||noise||_p.
  double margin = 0.1;
  double epsilon = 0.05;
  Norm p = Norm::L1;
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  Instance instance;
  Support planted;
  Vector x_planted;
};

/// Same params, same bits. Throws ContractViolation on bad parameters.
GeneratedInstance generate_instance(const GeneratorParams& params);

struct NamedInstance {
  std::string name;
  Instance instance;
};

/**
 * @brief A mixed suite of small instances.
 *
 * Alternates gaussian/correlated kinds, cycles n through 2..5, both norms,
 * and noiseless/noisy observations; m in 4..12 and k in 1..3 are drawn from
 * the seed.
 */
std::vector<NamedInstance> standard_suite(int count, std::uint64_t seed);

/// The parameters standard_suite uses for its i-th instance.
GeneratorParams suite_params(int i, std::uint64_t seed);

}  // namespace l0cover

#endif  // L0COVER_GENERATE_HPP
