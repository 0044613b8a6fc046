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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clueval {

/// Caller misuse: bad argument combinations, unsupported metric for an
/// algorithm, out-of-range worker counts.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data violates a structural requirement (empty cluster, k < 2,
/// non-finite coordinate, zero-norm vector under cosine).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured resource budget was exceeded. `round()` identifies the
/// pipeline round that hit the limit (0 when not round-specific).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int round)
      : std::runtime_error(what), round_(round) {}
  int round() const noexcept { return round_; }

 private:
  int round_;
};

}  // namespace clueval
