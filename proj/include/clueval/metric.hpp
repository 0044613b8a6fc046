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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

namespace clueval {

enum class Metric {
  euclidean,
  squared_euclidean,  // not a metric (no triangle inequality); allowed by design
  manhattan,
  cosine,
};

/// True for the kinds that satisfy the triangle inequality.
bool satisfies_triangle_inequality(Metric m);

/// True for kinds whose value is undefined on zero-norm vectors.
inline bool requires_nonzero_norm(Metric m) { return m == Metric::cosine; }

std::string to_string(Metric m);

/// Parses "euclidean" | "sqeuclidean" | "manhattan" | "cosine".
/// Throws UsageError on anything else.
Metric metric_from_string(const std::string& name);

namespace detail {

// Unchecked distance kernel shared by every hot loop. Callers guarantee
// equal dimensions and, for cosine, nonzero norms.
inline double distance_kernel(Metric m, const double* a, const double* b, std::size_t d) {
  switch (m) {
    case Metric::euclidean: {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
      }
      return std::sqrt(acc);
    }
    case Metric::squared_euclidean: {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
      }
      return acc;
    }
    case Metric::manhattan: {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    }
    case Metric::cosine: {
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
      }
      return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
    }
  }
  return 0.0;  // unreachable
}

}  // namespace detail

/// Distance between two points of equal dimension. Zero when p == q,
/// symmetric and nonnegative for every kind.
/// Throws UsageError on dimension mismatch, ValidationError when cosine
/// meets a zero-norm vector.
double distance(Metric m, std::span<const double> p, std::span<const double> q);

}  // namespace clueval
