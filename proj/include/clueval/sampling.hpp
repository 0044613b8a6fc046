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
#include <optional>
#include <string>
#include <vector>

#include "clueval/clustering.hpp"

namespace clueval {

/// Accuracy knobs. `t` is the expected per-cluster sample size and the
/// primary control; it can also be derived from (epsilon, delta, c) as
/// ceil((c / (2 eps^2)) * ln(4nk / delta)).
struct EstimationParams {
  std::uint64_t t = 64;
  double delta = 0.1;
  std::optional<double> epsilon;
  std::optional<double> c;

  static EstimationParams from_t(std::uint64_t t, double delta = 0.1);
  /// `c` defaults to 1 when unset. Requires epsilon, delta in (0, 1).
  static EstimationParams from_epsilon(double epsilon, double delta, std::optional<double> c,
                                       std::size_t n, std::uint32_t k);
};

enum class Strategy { pps, uniform };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

enum class SampleMode { full, pps, uniform };

struct SampleEntry {
  std::uint32_t point;  // dataset index
  double p;             // inclusion probability, in (0, 1]
};

/// One cluster's share of a plan. `probabilities` is aligned with the
/// cluster's member list and retained for every member; `entries` holds the
/// drawn members only (ascending point index).
struct ClusterSample {
  std::uint32_t cluster = 0;
  SampleMode mode = SampleMode::full;
  std::vector<SampleEntry> entries;
  std::vector<double> probabilities;
};

struct SamplingPlan {
  EstimationParams params;
  Strategy strategy = Strategy::pps;
  std::uint64_t seed = 0;
  std::vector<ClusterSample> per_cluster;
  /// Reference samples per cluster (empty for uniform plans and for
  /// fully-included clusters).
  std::vector<std::vector<std::uint32_t>> initial_samples;
  std::uint64_t distance_evals = 0;

  std::size_t total_drawn() const;
  std::vector<std::size_t> drawn_per_cluster() const;
};

/// Reference-sample selection for one cluster: independent inclusion with
/// probability min(1, (2/|C|) ln(2k/delta)). An empty outcome is redrawn
/// with a fresh key up to `max_retries` times; if still empty, one member
/// (picked by hash) is force-included so the result is never empty. Pure
/// function of (cd, cluster, delta, seed).
std::vector<std::uint32_t> draw_initial_sample(const ClusteredDataset& cd, std::uint32_t cluster,
                                               double delta, std::uint64_t seed,
                                               std::uint32_t max_retries = 16);

/// Per-member inclusion probabilities from the reference sample: for member
/// e, gamma = max(1/|C|, max over refs of d(e, ref) / W(ref)) and
/// p = min(1, t * gamma). References with W = 0 are skipped; if none remain
/// the floor 1/|C| makes this uniform sampling. `evals`, when given,
/// accumulates distance computations.
std::vector<double> pps_probabilities(const ClusteredDataset& cd, std::uint32_t cluster,
                                      const std::vector<std::uint32_t>& initial_sample,
                                      std::uint64_t t, std::uint64_t* evals = nullptr);

/// p = min(1, t / |C|) for every member.
std::vector<double> uniform_probabilities(const ClusteredDataset& cd, std::uint32_t cluster,
                                          std::uint64_t t);

/// Builds the whole plan: full inclusion when t >= |C|, otherwise
/// strategy-specific probabilities and an independent keyed Poisson draw per
/// member. Deterministic in (cd, params, strategy, seed).
SamplingPlan build_plan(const ClusteredDataset& cd, const EstimationParams& params,
                        Strategy strategy, std::uint64_t seed);

/// Canonical serialization (sorted keys, shortest round-trip floats) for
/// golden-file comparisons.
std::string plan_to_json(const SamplingPlan& plan);

}  // namespace clueval
