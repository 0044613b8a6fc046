// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/metric.hpp"

#include "clueval/errors.hpp"

namespace clueval {

bool satisfies_triangle_inequality(Metric m) {
  return m == Metric::euclidean || m == Metric::manhattan;
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::squared_euclidean: return "sqeuclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::cosine: return "cosine";
  }
  return "?";
}

Metric metric_from_string(const std::string& name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "sqeuclidean" || name == "squared_euclidean") return Metric::squared_euclidean;
  if (name == "manhattan") return Metric::manhattan;
  if (name == "cosine" || name == "cosine_distance") return Metric::cosine;
  throw UsageError("unknown metric '" + name +
                   "' (expected euclidean|sqeuclidean|manhattan|cosine)");
}

double distance(Metric m, std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw UsageError("distance: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  if (requires_nonzero_norm(m)) {
    double np = 0.0, nq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      np += p[i] * p[i];
      nq += q[i] * q[i];
    }
    if (np == 0.0 || nq == 0.0)
      throw ValidationError("cosine distance undefined for zero-norm vector");
  }
  return detail::distance_kernel(m, p.data(), q.data(), p.size());
}

}  // namespace clueval
