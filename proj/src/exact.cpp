// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clueval/errors.hpp"
#include "clueval/summation.hpp"

namespace clueval {

namespace detail {

std::vector<double> cluster_centroids(const ClusteredDataset& cd) {
  const std::size_t d = cd.data().dim();
  std::vector<double> centroids(static_cast<std::size_t>(cd.k()) * d, 0.0);
  for (std::uint32_t j = 0; j < cd.k(); ++j) {
    double* c = centroids.data() + static_cast<std::size_t>(j) * d;
    for (std::uint32_t m : cd.members(j)) {
      const double* row = cd.data().row(m);
      for (std::size_t col = 0; col < d; ++col) c[col] += row[col];
    }
    const double inv = 1.0 / static_cast<double>(cd.cluster_size(j));
    for (std::size_t col = 0; col < d; ++col) c[col] *= inv;
  }
  return centroids;
}

PointSilhouette assemble_silhouette(const double* w, const std::vector<std::size_t>& sizes,
                                    std::uint32_t own, std::size_t own_size) {
  PointSilhouette out;
  out.a = own_size > 1 ? w[own] / static_cast<double>(own_size - 1) : 0.0;
  double b = std::numeric_limits<double>::infinity();
  for (std::uint32_t j = 0; j < sizes.size(); ++j) {
    if (j == own) continue;
    b = std::min(b, w[j] / static_cast<double>(sizes[j]));
  }
  out.b = b;
  if (own_size == 1) {
    out.s = 0.0;
  } else {
    const double denom = std::max(out.a, out.b);
    out.s = denom > 0.0 ? (out.b - out.a) / denom : 0.0;
  }
  return out;
}

}  // namespace detail

double w_sum(const ClusteredDataset& cd, std::size_t e, std::uint32_t cluster) {
  const Dataset& ds = cd.data();
  const double* p = ds.row(e);
  NeumaierSum acc;
  for (std::uint32_t m : cd.members(cluster)) acc.add(ds.dist_to(m, p));
  return acc.value();
}

SilhouetteValues silhouette_exact(const ClusteredDataset& cd, bool keep_per_point) {
  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::uint32_t k = cd.k();

  SilhouetteValues out;
  if (keep_per_point) out.per_point.resize(n);
  std::vector<double> s_values(n);
  std::vector<NeumaierSum> acc(k);
  std::vector<double> w(k);

  for (std::size_t e = 0; e < n; ++e) {
    std::fill(acc.begin(), acc.end(), NeumaierSum{});
    const double* p = ds.row(e);
    for (std::size_t other = 0; other < n; ++other) {
      acc[cd.label(other)].add(ds.dist_to(other, p));
    }
    for (std::uint32_t j = 0; j < k; ++j) w[j] = acc[j].value();
    const PointSilhouette ps =
        detail::assemble_silhouette(w.data(), cd.cluster_sizes(), cd.label(e),
                                    cd.cluster_size(cd.label(e)));
    s_values[e] = ps.s;
    if (keep_per_point) out.per_point[e] = ps;
  }
  out.distance_evals = static_cast<std::uint64_t>(n) * n;
  out.overall = pairwise_sum(s_values) / static_cast<double>(n);
  return out;
}

FsSilhouette silhouette_fs(const ClusteredDataset& cd) {
  const Metric metric = cd.data().metric();
  if (!satisfies_triangle_inequality(metric))
    throw UsageError("centroid-bound silhouette requires euclidean or manhattan, got " +
                     to_string(metric));

  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::size_t d = ds.dim();
  const std::uint32_t k = cd.k();
  const std::vector<double> centroids = detail::cluster_centroids(cd);

  FsSilhouette out;
  std::vector<double> s_values(n);
  std::vector<double> centroid_dist(k);
  std::uint64_t evals = 0;

  for (std::size_t e = 0; e < n; ++e) {
    const double* p = ds.row(e);
    const std::uint32_t own = cd.label(e);
    const std::size_t own_size = cd.cluster_size(own);

    double a = 0.0;
    if (own_size > 1) {
      a = w_sum(cd, e, own) / static_cast<double>(own_size - 1);
      evals += own_size;
    }

    for (std::uint32_t j = 0; j < k; ++j) {
      centroid_dist[j] =
          detail::distance_kernel(metric, p, centroids.data() + static_cast<std::size_t>(j) * d, d);
    }
    evals += k;

    std::uint32_t nearest = k;
    for (std::uint32_t j = 0; j < k; ++j) {
      if (j == own) continue;
      if (nearest == k || centroid_dist[j] < centroid_dist[nearest]) nearest = j;
    }
    const double mean_nearest =
        w_sum(cd, e, nearest) / static_cast<double>(cd.cluster_size(nearest));
    evals += cd.cluster_size(nearest);

    double b = mean_nearest;
    for (std::uint32_t j = 0; j < k; ++j) {
      if (j == own || j == nearest) continue;
      // mean distance to cluster j is at least the distance to its centroid
      if (centroid_dist[j] >= mean_nearest) {
        ++out.skipped_clusters;
        continue;
      }
      b = std::min(b, w_sum(cd, e, j) / static_cast<double>(cd.cluster_size(j)));
      evals += cd.cluster_size(j);
    }

    double s = 0.0;
    if (own_size > 1) {
      const double denom = std::max(a, b);
      s = denom > 0.0 ? (b - a) / denom : 0.0;
    }
    s_values[e] = s;
  }
  out.distance_evals = evals;
  out.overall = pairwise_sum(s_values) / static_cast<double>(n);
  return out;
}

ClosedFormSilhouette silhouette_sq_closed_form(const ClusteredDataset& cd) {
  if (cd.data().metric() != Metric::squared_euclidean)
    throw UsageError("closed-form silhouette requires the sqeuclidean metric, got " +
                     to_string(cd.data().metric()));

  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::size_t d = ds.dim();
  const std::uint32_t k = cd.k();

  // Per-cluster aggregates: coordinate sums and squared-norm sums. With
  // these, the distance sum from any point to a whole cluster is
  // |C| * |e|^2 - 2 <e, S_C> + Q_C.
  std::vector<double> coord_sums(static_cast<std::size_t>(k) * d, 0.0);
  std::vector<double> sq_sums(k, 0.0);
  for (std::uint32_t j = 0; j < k; ++j) {
    NeumaierSum q;
    double* s = coord_sums.data() + static_cast<std::size_t>(j) * d;
    for (std::uint32_t m : cd.members(j)) {
      const double* row = ds.row(m);
      double norm2 = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        s[c] += row[c];
        norm2 += row[c] * row[c];
      }
      q.add(norm2);
    }
    sq_sums[j] = q.value();
  }

  ClosedFormSilhouette out;
  std::vector<double> s_values(n);
  std::vector<double> w(k);
  for (std::size_t e = 0; e < n; ++e) {
    const double* p = ds.row(e);
    double norm2 = 0.0;
    for (std::size_t c = 0; c < d; ++c) norm2 += p[c] * p[c];
    for (std::uint32_t j = 0; j < k; ++j) {
      const double* s = coord_sums.data() + static_cast<std::size_t>(j) * d;
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) dot += p[c] * s[c];
      const double value =
          static_cast<double>(cd.cluster_size(j)) * norm2 - 2.0 * dot + sq_sums[j];
      w[j] = std::max(0.0, value);  // guard cancellation on near-duplicate data
    }
    s_values[e] = detail::assemble_silhouette(w.data(), cd.cluster_sizes(), cd.label(e),
                                              cd.cluster_size(cd.label(e)))
                      .s;
  }
  out.closed_form_evals = static_cast<std::uint64_t>(n) * k;
  out.overall = pairwise_sum(s_values) / static_cast<double>(n);
  return out;
}

namespace detail {

PairCounts pair_counts(const ClusteredDataset& cd) {
  PairCounts out;
  double size_sq = 0.0;
  double total = 0.0;
  for (std::size_t s : cd.cluster_sizes()) {
    const double m = static_cast<double>(s);
    out.intra += m * (m - 1.0) / 2.0;
    size_sq += m * m;
    total += m;
  }
  out.inter = (total * total - size_sq) / 2.0;
  return out;
}

}  // namespace detail

namespace {

// intra: ordered intra-cluster pairs (each unordered pair twice);
// inter: each cluster pair counted once, from the lower-indexed side.
struct DistanceSums {
  double intra = 0.0;
  double inter = 0.0;
};

DistanceSums pairwise_distance_sums(const ClusteredDataset& cd) {
  const Dataset& ds = cd.data();
  const std::size_t n = cd.size();
  const std::uint32_t k = cd.k();
  std::vector<NeumaierSum> acc(k);
  NeumaierSum intra_sum;
  NeumaierSum inter_sum;
  for (std::size_t e = 0; e < n; ++e) {
    std::fill(acc.begin(), acc.end(), NeumaierSum{});
    const double* p = ds.row(e);
    for (std::size_t other = 0; other < n; ++other) acc[cd.label(other)].add(ds.dist_to(other, p));
    const std::uint32_t own = cd.label(e);
    intra_sum.add(acc[own].value());
    for (std::uint32_t j = own + 1; j < k; ++j) inter_sum.add(acc[j].value());
  }
  return {intra_sum.value(), inter_sum.value()};
}

}  // namespace

CohesionSeparation cohesion_separation_exact(const ClusteredDataset& cd) {
  const detail::PairCounts counts = detail::pair_counts(cd);
  if (counts.intra == 0.0)
    throw ValidationError("cohesion undefined: every cluster is a singleton");
  const DistanceSums sums = pairwise_distance_sums(cd);
  return {0.5 * sums.intra / counts.intra, sums.inter / counts.inter};
}

double cohesion_exact(const ClusteredDataset& cd) { return cohesion_separation_exact(cd).cohesion; }

double separation_exact(const ClusteredDataset& cd) {
  return pairwise_distance_sums(cd).inter / detail::pair_counts(cd).inter;
}

}  // namespace clueval
