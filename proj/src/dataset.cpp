// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/dataset.hpp"

#include <cmath>
#include <string>

#include "clueval/errors.hpp"

namespace clueval {

Dataset::Dataset(std::vector<double> values, std::size_t dim, Metric metric)
    : n_(0), d_(dim), metric_(metric) {
  if (dim == 0) throw ValidationError("dataset dimension must be >= 1");
  if (values.empty()) throw ValidationError("dataset must contain at least one point");
  if (values.size() % dim != 0)
    throw ValidationError("dataset buffer size " + std::to_string(values.size()) +
                          " is not a multiple of dimension " + std::to_string(dim));
  n_ = values.size() / dim;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw ValidationError("non-finite coordinate at point " + std::to_string(i / dim) +
                            ", column " + std::to_string(i % dim));
  }
  if (requires_nonzero_norm(metric)) {
    for (std::size_t i = 0; i < n_; ++i) {
      double norm2 = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double x = values[i * dim + c];
        norm2 += x * x;
      }
      if (norm2 == 0.0)
        throw ValidationError("zero-norm point " + std::to_string(i) +
                              " not allowed under cosine distance");
    }
  }
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

}  // namespace clueval
