// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "clueval/errors.hpp"

namespace clueval {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

bool parse_double(std::string_view field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !field.empty();
}

bool parse_int(std::string_view field, std::int64_t& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !field.empty();
}

}  // namespace

CsvData load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);

  std::vector<double> values;
  std::vector<std::int64_t> labels;
  std::optional<std::size_t> labels_col = options.labels_col;
  std::size_t columns = 0;
  std::size_t line_no = 0;
  bool had_header = false;
  bool first_data_row = true;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);

    if (first_data_row) {
      // Header detection: a first row with any non-numeric field is a header.
      bool numeric = true;
      for (const auto& f : fields) {
        double unused;
        if (!parse_double(f, unused)) {
          numeric = false;
          break;
        }
      }
      if (!numeric && !had_header) {
        had_header = true;
        continue;
      }
      columns = fields.size();
      if (!labels_col && options.last_col_labels) {
        if (columns < 2) throw ParseError("need at least 2 columns when labels are expected", line_no);
        labels_col = columns - 1;
      }
      if (labels_col && *labels_col >= columns)
        throw ParseError("labels column " + std::to_string(*labels_col) + " out of range for " +
                         std::to_string(columns) + " columns", line_no);
      if (columns - (labels_col ? 1 : 0) == 0)
        throw ParseError("no coordinate columns", line_no);
      first_data_row = false;
    }

    if (fields.size() != columns)
      throw ParseError("expected " + std::to_string(columns) + " fields, got " +
                       std::to_string(fields.size()), line_no);

    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (labels_col && c == *labels_col) {
        std::int64_t v;
        if (!parse_int(fields[c], v))
          throw ParseError("label field '" + std::string(fields[c]) + "' is not an integer",
                           line_no);
        labels.push_back(v);
      } else {
        double v;
        if (!parse_double(fields[c], v))
          throw ParseError("field '" + std::string(fields[c]) + "' is not a number", line_no);
        values.push_back(v);
      }
    }
  }

  if (first_data_row) throw ParseError("no data rows in '" + path + "'", line_no);

  const std::size_t dim = columns - (labels_col ? 1 : 0);
  CsvData result{Dataset(std::move(values), dim, options.metric), std::nullopt, had_header};
  if (labels_col) result.labels = std::move(labels);
  return result;
}

std::vector<std::int64_t> load_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open labels file '" + path + "'", 0);
  std::vector<std::int64_t> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto field = trim(line);
    if (field.empty()) continue;
    std::int64_t v;
    if (!parse_int(field, v))
      throw ParseError("label '" + std::string(field) + "' is not an integer", line_no);
    labels.push_back(v);
  }
  return labels;
}

void write_csv(const std::string& path, const Dataset& dataset,
               const std::vector<std::uint32_t>* labels) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  char buf[64];
  std::string line;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    line.clear();
    const double* row = dataset.row(i);
    for (std::size_t c = 0; c < dataset.dim(); ++c) {
      if (c) line.push_back(',');
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), row[c]);
      line.append(buf, ptr);
    }
    if (labels) {
      line.push_back(',');
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), (*labels)[i]);
      line.append(buf, ptr);
    }
    line.push_back('\n');
    out << line;
  }
  if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

}  // namespace clueval
