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

#include "clueval/dataset.hpp"

namespace clueval {

/// How to read point files: one point per row, comma-separated numeric
/// columns, optionally one integer label column. A header row is detected
/// automatically (non-numeric first row).
struct CsvOptions {
  /// Column (0-based) holding cluster labels. Unset: no label column.
  std::optional<std::size_t> labels_col;
  /// Convenience: treat the last column as labels (ignored when labels_col
  /// is set).
  bool last_col_labels = false;
  Metric metric = Metric::euclidean;
};

struct CsvData {
  Dataset dataset;
  std::optional<std::vector<std::int64_t>> labels;
  bool had_header = false;
};

/// Throws ParseError (with a 1-based line number) on malformed input and
/// ValidationError via Dataset construction.
CsvData load_csv(const std::string& path, const CsvOptions& options);

/// One integer per line; blank lines ignored.
std::vector<std::int64_t> load_labels_file(const std::string& path);

/// Writes points (shortest round-trip float formatting) and, when given,
/// a final label column. Byte-deterministic for identical inputs.
void write_csv(const std::string& path, const Dataset& dataset,
               const std::vector<std::uint32_t>* labels = nullptr);

}  // namespace clueval
