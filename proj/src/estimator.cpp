// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "clueval/detail/ht_core.hpp"
#include "clueval/errors.hpp"
#include "clueval/summation.hpp"

namespace clueval {

double w_hat(const ClusteredDataset& cd, std::size_t e, const ClusterSample& sample) {
  const Dataset& ds = cd.data();
  const double* p = ds.row(e);
  NeumaierSum acc;
  for (const SampleEntry& se : sample.entries) acc.add(ds.dist_to(se.point, p) * (1.0 / se.p));
  return acc.value();
}

SilhouetteEstimate estimate_silhouette_with_plan(const ClusteredDataset& cd,
                                                 const SamplingPlan& plan,
                                                 const EstimateOptions& options) {
  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::uint32_t k = cd.k();
  const detail::FlatPlan fp = detail::flatten_plan(ds, plan);

  SilhouetteEstimate out;
  out.t_used = plan.params.t;
  out.drawn_per_cluster = plan.drawn_per_cluster();
  if (options.keep_per_point) out.per_point.resize(n);

  std::vector<double> s_values(n);
  std::vector<double> w(k);
  for (std::size_t e = 0; e < n; ++e) {
    detail::ht_point_sums(fp, ds.row(e), w.data());
    const PointSilhouette ps = detail::assemble_silhouette(
        w.data(), cd.cluster_sizes(), cd.label(e), cd.cluster_size(cd.label(e)));
    s_values[e] = ps.s;
    if (options.keep_per_point) out.per_point[e] = ps;
  }
  out.overall = pairwise_sum(s_values) / static_cast<double>(n);
  out.distance_evals =
      plan.distance_evals + static_cast<std::uint64_t>(n) * fp.total_drawn;
  return out;
}

SilhouetteEstimate estimate_silhouette(const ClusteredDataset& cd, const EstimationParams& params,
                                       Strategy strategy, std::uint64_t seed,
                                       const EstimateOptions& options) {
  const SamplingPlan plan = build_plan(cd, params, strategy, seed);
  return estimate_silhouette_with_plan(cd, plan, options);
}

SimplifiedResult simplified_silhouette(const ClusteredDataset& cd, SimplifiedVariant variant) {
  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::size_t d = ds.dim();
  const std::uint32_t k = cd.k();
  const Metric metric = ds.metric();
  const std::vector<double> centroids = detail::cluster_centroids(cd);

  if (requires_nonzero_norm(metric)) {
    for (std::uint32_t j = 0; j < k; ++j) {
      double norm2 = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double x = centroids[j * d + c];
        norm2 += x * x;
      }
      if (norm2 == 0.0)
        throw ValidationError("centroid of cluster " + std::to_string(j) +
                              " has zero norm; cosine distance undefined");
    }
  }

  std::vector<double> s_values(n);
  for (std::size_t e = 0; e < n; ++e) {
    const double* p = ds.row(e);
    const std::uint32_t own = cd.label(e);
    double a = 0.0;
    double b = std::numeric_limits<double>::infinity();
    for (std::uint32_t j = 0; j < k; ++j) {
      const double dist = detail::distance_kernel(metric, p, centroids.data() + j * d, d);
      if (j == own)
        a = dist;
      else
        b = std::min(b, dist);
    }
    if (variant == SimplifiedVariant::squared) {
      a *= a;
      b *= b;
    }
    const double denom = std::max(a, b);
    s_values[e] = denom > 0.0 ? (b - a) / denom : 0.0;
  }

  SimplifiedResult out;
  out.overall = pairwise_sum(s_values) / static_cast<double>(n);
  out.distance_evals = static_cast<std::uint64_t>(n) * k;
  return out;
}

CohesionSeparationEstimate estimate_cohesion_separation(const ClusteredDataset& cd,
                                                        const EstimationParams& params,
                                                        std::uint64_t seed) {
  const detail::PairCounts counts = detail::pair_counts(cd);
  if (counts.intra == 0.0)
    throw ValidationError("cohesion undefined: every cluster is a singleton");

  const SamplingPlan plan = build_plan(cd, params, Strategy::pps, seed);
  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::uint32_t k = cd.k();
  const detail::FlatPlan fp = detail::flatten_plan(ds, plan);

  std::vector<double> w(k);
  NeumaierSum intra_sum;
  NeumaierSum inter_sum;
  for (std::size_t e = 0; e < n; ++e) {
    detail::ht_point_sums(fp, ds.row(e), w.data());
    const std::uint32_t own = cd.label(e);
    intra_sum.add(w[own]);
    for (std::uint32_t j = own + 1; j < k; ++j) inter_sum.add(w[j]);
  }

  CohesionSeparationEstimate out;
  out.cohesion = 0.5 * intra_sum.value() / counts.intra;
  out.separation = inter_sum.value() / counts.inter;
  out.distance_evals =
      plan.distance_evals + static_cast<std::uint64_t>(n) * fp.total_drawn;
  return out;
}

}  // namespace clueval
