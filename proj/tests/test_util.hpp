// Copyright 2026 The Barenco Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared generators for the property-style tests.

#include <random>

#include "barenco/numerics.hpp"

namespace barenco::testing {

inline CMatrix random_hermitian(std::mt19937_64& rng, Index dim,
                                double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  CMatrix h(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    h(i, i) = n(rng);
    for (Index j = 0; j < i; ++j) {
      h(i, j) = Complex(n(rng), n(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

inline CMatrix random_unitary(std::mt19937_64& rng, Index dim) {
  return propagate(random_hermitian(rng, dim, 2.0), 1.0);
}

}  // namespace barenco::testing
