// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/clustering.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "clueval/errors.hpp"

namespace clueval {

ClusteredDataset::ClusteredDataset(Dataset dataset, std::vector<std::uint32_t> labels,
                                   std::uint32_t k)
    : dataset_(std::move(dataset)), k_(k) {
  if (k < 2)
    throw ValidationError("clustering needs at least two clusters; the inter-cluster term "
                          "is undefined for k = 1");
  if (labels.size() != dataset_.size())
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match dataset size " + std::to_string(dataset_.size()));

  std::vector<std::vector<std::uint32_t>> members(k);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= k)
      throw ValidationError("label " + std::to_string(labels[i]) + " at point " +
                            std::to_string(i) + " out of range [0, " + std::to_string(k) + ")");
    members[labels[i]].push_back(static_cast<std::uint32_t>(i));
  }
  sizes_.resize(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    if (members[j].empty())
      throw ValidationError("cluster " + std::to_string(j) + " is empty");
    sizes_[j] = members[j].size();  // members already sorted: built in index order
  }
  labels_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(labels));
  members_ = std::make_shared<const std::vector<std::vector<std::uint32_t>>>(std::move(members));
}

ClusteredDataset validate_clustering(Dataset dataset, std::span<const std::int64_t> raw_labels) {
  if (raw_labels.size() != dataset.size())
    throw ValidationError("label count " + std::to_string(raw_labels.size()) +
                          " does not match dataset size " + std::to_string(dataset.size()));

  std::map<std::int64_t, std::uint32_t> remap;
  for (std::int64_t v : raw_labels) remap.emplace(v, 0);
  std::uint32_t next = 0;
  for (auto& [value, dense] : remap) dense = next++;
  if (remap.size() < 2)
    throw ValidationError("clustering needs at least two clusters; the inter-cluster term "
                          "is undefined for k = 1");

  std::vector<std::uint32_t> labels(raw_labels.size());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) labels[i] = remap.at(raw_labels[i]);
  return ClusteredDataset(std::move(dataset), std::move(labels),
                          static_cast<std::uint32_t>(remap.size()));
}

}  // namespace clueval
