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

#include <cstdint>
#include <vector>

#include "clueval/clustering.hpp"

namespace clueval {

/// Per-point silhouette decomposition. Conventions: a singleton cluster gives
/// a = 0 and s = 0; when a = b = 0 (exact duplicates straddling clusters),
/// s = 0. Otherwise s = (b - a) / max(a, b), always in [-1, 1].
struct PointSilhouette {
  double a = 0.0;  // mean distance to the other members of the own cluster
  double b = 0.0;  // smallest mean distance to another cluster
  double s = 0.0;
};

struct SilhouetteValues {
  double overall = 0.0;
  std::vector<PointSilhouette> per_point;  // empty unless requested
  std::uint64_t distance_evals = 0;
};

/// Sum of distances from point `e` to every member of `cluster` (the member
/// equal to `e`, if any, contributes 0).
double w_sum(const ClusteredDataset& cd, std::size_t e, std::uint32_t cluster);

/// Definition-based silhouette; n^2 distance evaluations.
SilhouetteValues silhouette_exact(const ClusteredDataset& cd, bool keep_per_point = true);

struct FsSilhouette {
  double overall = 0.0;
  std::uint64_t skipped_clusters = 0;  // mean-distance computations avoided
  std::uint64_t distance_evals = 0;
};

/// Exact silhouette with the centroid lower-bound shortcut: a candidate
/// cluster whose centroid is at least as far from e as the mean distance to
/// the nearest-centroid cluster cannot attain the inter-cluster minimum and
/// is skipped. Valid for norm-induced distances (the mean distance to a
/// cluster is at least the distance to its arithmetic-mean centroid, by
/// convexity), hence gated to euclidean and manhattan.
FsSilhouette silhouette_fs(const ClusteredDataset& cd);

struct ClosedFormSilhouette {
  double overall = 0.0;
  std::uint64_t closed_form_evals = 0;  // one per (point, cluster)
};

/// Squared-Euclidean silhouette from per-cluster aggregates (coordinate sums
/// and squared-norm sums); O(nkd) work instead of O(n^2 d). Requires
/// metric == squared_euclidean.
ClosedFormSilhouette silhouette_sq_closed_form(const ClusteredDataset& cd);

struct CohesionSeparation {
  double cohesion = 0.0;    // average intra-cluster pairwise distance
  double separation = 0.0;  // average inter-cluster pairwise distance
};

/// Both averages from one n^2 sweep. Cohesion requires at least one cluster
/// with two or more members.
CohesionSeparation cohesion_separation_exact(const ClusteredDataset& cd);

double cohesion_exact(const ClusteredDataset& cd);
double separation_exact(const ClusteredDataset& cd);

namespace detail {

/// Arithmetic-mean centroids, one row per cluster.
std::vector<double> cluster_centroids(const ClusteredDataset& cd);

/// Pair counts behind the cohesion/separation denominators.
struct PairCounts {
  double intra = 0.0;  // sum over clusters of |C| choose 2
  double inter = 0.0;  // sum over cluster pairs of |C1| * |C2|
};
PairCounts pair_counts(const ClusteredDataset& cd);

/// Shared assembly of (a, b, s) from the per-cluster distance sums of one
/// point. `w` holds W values for all k clusters.
PointSilhouette assemble_silhouette(const double* w, const std::vector<std::size_t>& sizes,
                                    std::uint32_t own, std::size_t own_size);

}  // namespace detail

}  // namespace clueval
