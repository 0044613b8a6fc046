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
#include <span>
#include <string>
#include <vector>

#include "clueval/estimator.hpp"

namespace clueval::engine {

// The estimate flows through four barrier-synchronized rounds over w
// concurrent workers:
//   1. points land on worker (index mod w); reference-sample points are
//      broadcast, and every worker emits partial distance sums for them
//      over its own slice;
//   2. partials are re-broadcast, every worker assembles the full sums and
//      prices its own points;
//   3. the final Poisson sample is broadcast, every worker scores its own
//      points and emits one partial silhouette sum;
//   4. a single reducer folds the w partials into the estimate.
//
// Memory is accounted in key-value pair counts (max per worker and
// aggregate per round); a broadcast is one shared immutable buffer counted
// once per worker. Sampling decisions use the keyed counter draws, so the
// pipeline reproduces the sequential estimator's draws decision for
// decision.

struct RoundStats {
  int round = 0;
  std::size_t max_local_pairs = 0;   // largest reducer input, in pairs
  std::size_t aggregate_pairs = 0;   // sum of reducer inputs
  std::size_t shuffle_pairs = 0;     // mapper emissions incl. broadcast copies
  double wall_time_ms = 0.0;
};

struct EngineOptions {
  std::size_t workers = 1;
  /// Largest reducer input allowed per round, in pairs; 0 = unlimited.
  /// Exceeding it raises ResourceError naming the round.
  std::size_t max_local_pairs = 0;
  bool keep_per_point = false;
};

struct PipelineResult {
  SilhouetteEstimate estimate;
  std::vector<RoundStats> rounds;
};

/// Balanced point partition: index i goes to worker i mod w. Slice sizes
/// differ by at most one. Throws UsageError unless 1 <= w <= n.
std::vector<std::vector<std::uint32_t>> partition(const ClusteredDataset& cd, std::size_t w);

PipelineResult run_pipeline(const ClusteredDataset& cd, const EstimationParams& params,
                            Strategy strategy, std::uint64_t seed, const EngineOptions& options);

/// Per-round table of the memory/shuffle ledger. Verifies the aggregate
/// never exceeds workers * max-local for any round.
std::string memory_report(std::span<const RoundStats> rounds, std::size_t workers);

}  // namespace clueval::engine
