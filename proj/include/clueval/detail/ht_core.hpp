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

// Inverse-probability-weighted distance sums shared by the sequential
// estimator and the pipeline reducers. Both paths must run exactly this
// code, in the same per-cluster ascending-index order, so that a one-worker
// pipeline reproduces the sequential estimate bit for bit.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clueval/dataset.hpp"
#include "clueval/sampling.hpp"
#include "clueval/summation.hpp"

namespace clueval::detail {

/// Drawn sample of one cluster with coordinates gathered contiguously and
/// reciprocal probabilities aligned, for cache-friendly sweeps.
struct FlatCluster {
  std::vector<double> coords;
  std::vector<double> inv_p;
  std::size_t count = 0;
};

struct FlatPlan {
  std::vector<FlatCluster> clusters;
  std::size_t dim = 0;
  Metric metric = Metric::euclidean;
  std::size_t total_drawn = 0;
};

/// `per_cluster[j]` must list drawn entries in ascending point order.
inline FlatPlan flatten_entries(const Dataset& ds,
                                const std::vector<std::vector<SampleEntry>>& per_cluster) {
  FlatPlan fp;
  fp.dim = ds.dim();
  fp.metric = ds.metric();
  fp.clusters.resize(per_cluster.size());
  for (std::size_t j = 0; j < per_cluster.size(); ++j) {
    FlatCluster& fc = fp.clusters[j];
    fc.count = per_cluster[j].size();
    fc.coords.resize(fc.count * fp.dim);
    fc.inv_p.resize(fc.count);
    for (std::size_t i = 0; i < fc.count; ++i) {
      const SampleEntry& se = per_cluster[j][i];
      const double* row = ds.row(se.point);
      for (std::size_t c = 0; c < fp.dim; ++c) fc.coords[i * fp.dim + c] = row[c];
      fc.inv_p[i] = 1.0 / se.p;
    }
    fp.total_drawn += fc.count;
  }
  return fp;
}

inline FlatPlan flatten_plan(const Dataset& ds, const SamplingPlan& plan) {
  std::vector<std::vector<SampleEntry>> entries(plan.per_cluster.size());
  for (std::size_t j = 0; j < plan.per_cluster.size(); ++j)
    entries[j] = plan.per_cluster[j].entries;
  return flatten_entries(ds, entries);
}

/// Weighted distance sum from point `p` to one flattened cluster sample.
inline double ht_cluster_sum(Metric m, std::size_t dim, const double* p, const FlatCluster& fc) {
  NeumaierSum acc;
  if (m == Metric::euclidean && dim == 3) {
    // dominant configuration in the benchmark datasets
    const double x = p[0], y = p[1], z = p[2];
    const double* c = fc.coords.data();
    for (std::size_t i = 0; i < fc.count; ++i, c += 3) {
      const double dx = x - c[0];
      const double dy = y - c[1];
      const double dz = z - c[2];
      acc.add(std::sqrt(dx * dx + dy * dy + dz * dz) * fc.inv_p[i]);
    }
    return acc.value();
  }
  for (std::size_t i = 0; i < fc.count; ++i) {
    acc.add(distance_kernel(m, p, fc.coords.data() + i * dim, dim) * fc.inv_p[i]);
  }
  return acc.value();
}

/// Fills `w_out[j]` with the weighted sum against every cluster sample.
inline void ht_point_sums(const FlatPlan& fp, const double* p, double* w_out) {
  for (std::size_t j = 0; j < fp.clusters.size(); ++j)
    w_out[j] = ht_cluster_sum(fp.metric, fp.dim, p, fp.clusters[j]);
}

}  // namespace clueval::detail
