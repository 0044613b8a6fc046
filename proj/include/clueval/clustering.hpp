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
#include <memory>
#include <span>
#include <vector>

#include "clueval/dataset.hpp"

namespace clueval {

/// A dataset together with a validated k-way partition: every cluster
/// non-empty, labels dense in [0, k), per-cluster member lists sorted by
/// point index. Immutable and cheap to copy (shared storage).
class ClusteredDataset {
 public:
  /// Strict constructor: `labels[i]` must already lie in [0, k). Throws
  /// ValidationError on k < 2, label out of range, an empty cluster, or a
  /// label count different from the dataset size.
  ClusteredDataset(Dataset dataset, std::vector<std::uint32_t> labels, std::uint32_t k);

  const Dataset& data() const { return dataset_; }
  std::size_t size() const { return dataset_.size(); }
  std::uint32_t k() const { return k_; }

  std::uint32_t label(std::size_t i) const { return (*labels_)[i]; }
  std::span<const std::uint32_t> labels() const { return {labels_->data(), labels_->size()}; }
  std::span<const std::uint32_t> members(std::uint32_t cluster) const {
    return {(*members_)[cluster].data(), (*members_)[cluster].size()};
  }
  std::size_t cluster_size(std::uint32_t cluster) const { return (*members_)[cluster].size(); }
  const std::vector<std::size_t>& cluster_sizes() const { return sizes_; }

 private:
  Dataset dataset_;
  std::shared_ptr<const std::vector<std::uint32_t>> labels_;
  std::shared_ptr<const std::vector<std::vector<std::uint32_t>>> members_;
  std::vector<std::size_t> sizes_;
  std::uint32_t k_;
};

/// Builds a ClusteredDataset from arbitrary integer labels. Distinct label
/// values are remapped, in increasing order, onto the dense range 0..k-1
/// (gaps in the raw values are fine). Throws ValidationError when fewer than
/// two distinct labels remain, or when the label count does not match the
/// dataset.
ClusteredDataset validate_clustering(Dataset dataset, std::span<const std::int64_t> raw_labels);

}  // namespace clueval
