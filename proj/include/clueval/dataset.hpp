// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "clueval/metric.hpp"

namespace clueval {

/// Immutable n x d table of points with the distance kind chosen at
/// construction. Copies share storage, so passing Dataset by value is cheap
/// and concurrent read-only use is safe.
class Dataset {
 public:
  /// `values` is row-major, size n*d. Throws ValidationError when empty,
  /// when the size is not a multiple of `dim`, when any coordinate is not
  /// finite, or when `metric` is cosine and some row has zero norm.
  Dataset(std::vector<double> values, std::size_t dim, Metric metric = Metric::euclidean);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }
  Metric metric() const { return metric_; }

  const double* row(std::size_t i) const { return values_->data() + i * d_; }
  std::span<const double> point(std::size_t i) const { return {row(i), d_}; }
  std::span<const double> values() const { return {values_->data(), n_ * d_}; }

  double dist(std::size_t i, std::size_t j) const {
    return detail::distance_kernel(metric_, row(i), row(j), d_);
  }
  double dist_to(std::size_t i, const double* q) const {
    return detail::distance_kernel(metric_, row(i), q, d_);
  }

 private:
  std::shared_ptr<const std::vector<double>> values_;
  std::size_t n_;
  std::size_t d_;
  Metric metric_;
};

}  // namespace clueval
