// Copyright 2026 The mixaug Authors
//
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

#include "mixaug/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixaug/error.hpp"

namespace mixaug {
namespace {

void require_positive(double alpha, const char* what) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError(std::string(what) + ": alpha must be positive, got " +
                         std::to_string(alpha));
  }
}

// Marsaglia & Tsang (2000), valid for shape >= 1.
double log_gamma_ge1(SeededRng& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return std::log(d) + std::log(v);
    }
  }
}

}  // namespace

double sample_log_gamma(SeededRng& rng, double shape) {
  require_positive(shape, "sample_gamma");
  if (shape >= 1.0) return log_gamma_ge1(rng, shape);
  const double boosted = log_gamma_ge1(rng, shape + 1.0);
  const double u = 1.0 - rng.uniform();  // (0, 1]
  return boosted + std::log(u) / shape;
}

double sample_gamma(SeededRng& rng, double shape) {
  return std::exp(sample_log_gamma(rng, shape));
}

double sample_beta(SeededRng& rng, double alpha) {
  require_positive(alpha, "sample_beta");
  const double lg1 = sample_log_gamma(rng, alpha);
  const double lg2 = sample_log_gamma(rng, alpha);
  // g1 / (g1 + g2) == 1 / (1 + exp(lg2 - lg1))
  const double lambda = 1.0 / (1.0 + std::exp(lg2 - lg1));
  return std::clamp(lambda, 0.0, 1.0);
}

std::vector<double> sample_dirichlet(SeededRng& rng, double alpha, std::size_t k) {
  require_positive(alpha, "sample_dirichlet");
  if (k == 0) throw ParameterError("sample_dirichlet: k must be >= 1");
  if (k == 1) return {1.0};

  std::vector<double> w(k);
  for (auto& lg : w) lg = sample_log_gamma(rng, alpha);
  const double top = *std::max_element(w.begin(), w.end());
  double total = 0.0;
  for (auto& x : w) {
    x = std::exp(x - top);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace mixaug
