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

#include "l0cover/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

namespace l0cover {

std::string to_string(GeneratorKind kind) {
  return kind == GeneratorKind::Gaussian ? "gaussian" : "correlated";
}

GeneratorKind parse_generator_kind(const std::string& s) {
  if (s == "gaussian") return GeneratorKind::Gaussian;
  if (s == "correlated") return GeneratorKind::Correlated;
  throw ContractViolation("unknown instance kind '" + s + "' (gaussian or correlated)");
}

GeneratedInstance generate_instance(const GeneratorParams& params) {
  const Index n = params.n;
  const Index m = params.m;
  if (n < 1 || m < 1) throw ContractViolation("generator needs n >= 1 and m >= 1");
  if (params.k < 1 || params.k > m) throw ContractViolation("generator needs 1 <= k <= m");
  if (!(params.noise >= 0.0) || !(params.margin >= 0.0) || !(params.epsilon >= 0.0)) {
    throw ContractViolation("noise, margin and epsilon must be nonnegative");
  }

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto gaussian_matrix = [&](Index rows, Index cols) {
    Matrix A(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) A(i, j) = gauss(rng);
      const double norm = A.col(j).norm();
      if (norm > 0.0) A.col(j) /= norm;
    }
    return A;
  };

  Matrix H(n, m);
  if (params.kind == GeneratorKind::Gaussian) {
    H = gaussian_matrix(n, m);
  } else {
    const Index base = (m + 1) / 2;
    const Matrix A = gaussian_matrix(n, base);
    H.leftCols(base) = A;
    for (Index t = 0; base + t < m; ++t) {
      for (Index i = 0; i < n; ++i) H(i, base + t) = A(i, t) + params.epsilon * gauss(rng);
    }
  }

  std::vector<Index> columns(static_cast<std::size_t>(m));
  std::iota(columns.begin(), columns.end(), Index{0});
  for (Index j = 0; j < params.k; ++j) {
    std::uniform_int_distribution<Index> pick(j, m - 1);
    std::swap(columns[static_cast<std::size_t>(j)], columns[static_cast<std::size_t>(pick(rng))]);
  }
  columns.resize(static_cast<std::size_t>(params.k));
  Support planted(columns);

  std::uniform_real_distribution<double> magnitude(1.0, 2.0);
  std::bernoulli_distribution negative(0.5);
  Vector x = Vector::Zero(m);
  for (Index j : planted) {
    const double v = magnitude(rng);
    x[j] = negative(rng) ? -v : v;
  }

  Vector noise(n);
  for (Index i = 0; i < n; ++i) noise[i] = params.noise * gauss(rng);
  Vector y = H * x + noise;
  const double alpha = (1.0 + params.margin) * norm_of(params.p, noise);

  return {Instance(std::move(H), std::move(y), params.p, alpha), std::move(planted), std::move(x)};
}

GeneratorParams suite_params(int i, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1'000'003ULL + static_cast<std::uint64_t>(i));
  GeneratorParams p;
  p.kind = i % 2 ? GeneratorKind::Correlated : GeneratorKind::Gaussian;
  p.n = 2 + (i / 2) % 4;
  p.m = std::uniform_int_distribution<Index>(4, 12)(rng);
  p.k = std::uniform_int_distribution<Index>(1, std::min<Index>(3, p.m))(rng);
  p.p = (i / 8) % 2 ? Norm::LInf : Norm::L1;
  p.noise = (i / 16) % 2 ? 0.05 : 0.0;
  p.seed = rng();
  return p;
}

std::vector<NamedInstance> standard_suite(int count, std::uint64_t seed) {
  std::vector<NamedInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto params = suite_params(i, seed);
    char name[64];
    std::snprintf(name, sizeof name, "suite-%03d-%s-n%ld-m%ld-p%s", i,
                  to_string(params.kind).c_str(), static_cast<long>(params.n),
                  static_cast<long>(params.m), to_string(params.p).c_str());
    out.push_back({name, generate_instance(params).instance});
  }
  return out;
}

}  // namespace l0cover
