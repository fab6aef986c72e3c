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

#pragma once

#include <cstddef>
#include <vector>

#include "mixaug/rng.hpp"

namespace mixaug {

/// log of a Gamma(shape, 1) variate (Marsaglia-Tsang; shape < 1 uses the
/// U^(1/shape) boost, carried in log space so tiny shapes never underflow).
double sample_log_gamma(SeededRng& rng, double shape);

/// Gamma(shape, 1) variate.
double sample_gamma(SeededRng& rng, double shape);

/// λ ~ Beta(alpha, alpha), computed as g1 / (g1 + g2) from two Gamma draws.
/// Throws ParameterError for alpha <= 0.
double sample_beta(SeededRng& rng, double alpha);

/// Symmetric Dirichlet(alpha, ..., alpha) over k components.
std::vector<double> sample_dirichlet(SeededRng& rng, double alpha, std::size_t k);

}  // namespace mixaug
