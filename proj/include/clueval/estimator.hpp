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

#include "clueval/exact.hpp"
#include "clueval/sampling.hpp"

namespace clueval {

struct EstimateOptions {
  bool keep_per_point = false;
};

struct SilhouetteEstimate {
  double overall = 0.0;
  std::vector<PointSilhouette> per_point;       // empty unless requested
  std::vector<std::size_t> drawn_per_cluster;
  std::uint64_t distance_evals = 0;
  std::uint64_t t_used = 0;
};

/// Inverse-probability-weighted estimate of the distance sum from point `e`
/// to the cluster behind `sample`: sum over drawn members of d(e, m) / p_m.
/// Exact when every p is 1.
double w_hat(const ClusteredDataset& cd, std::size_t e, const ClusterSample& sample);

/// Sampling-based silhouette: builds a plan, estimates every per-cluster
/// distance sum from the drawn members, and averages the per-point values.
SilhouetteEstimate estimate_silhouette(const ClusteredDataset& cd, const EstimationParams& params,
                                       Strategy strategy, std::uint64_t seed,
                                       const EstimateOptions& options = {});

/// Same, reusing an existing plan.
SilhouetteEstimate estimate_silhouette_with_plan(const ClusteredDataset& cd,
                                                 const SamplingPlan& plan,
                                                 const EstimateOptions& options = {});

enum class SimplifiedVariant { plain, squared };

struct SimplifiedResult {
  double overall = 0.0;
  std::uint64_t distance_evals = 0;
};

/// Centroid surrogate: a and b are distances to cluster centroids instead of
/// mean member distances; O(nk) work. The squared variant squares both
/// distances before forming s.
SimplifiedResult simplified_silhouette(const ClusteredDataset& cd,
                                       SimplifiedVariant variant = SimplifiedVariant::plain);

struct CohesionSeparationEstimate {
  double cohesion = 0.0;
  double separation = 0.0;
  std::uint64_t distance_evals = 0;
};

/// Cohesion/separation with every pairwise distance sum replaced by its
/// weighted sample estimate from one PPS plan.
CohesionSeparationEstimate estimate_cohesion_separation(const ClusteredDataset& cd,
                                                        const EstimationParams& params,
                                                        std::uint64_t seed);

}  // namespace clueval
