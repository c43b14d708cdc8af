/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef LATTICELAB_TEXTIO_H_
#define LATTICELAB_TEXTIO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latticelab {

// Line-oriented key-value text used by every file format:
//
//   <header>
//   key=value          (fields, order preserved, keys may repeat)
//   1,2,3              (bare data lines)
//
// Blank lines and lines starting with '#' are ignored on read.
class TextDocument {
 public:
  explicit TextDocument(std::string header) : header_(std::move(header)) {}

  // Throws ParseError if the first line is not `expected_header`.
  static TextDocument Parse(std::string_view text, std::string_view expected_header);
  static TextDocument ReadFile(const std::filesystem::path& path,
                               std::string_view expected_header);

  const std::string& header() const { return header_; }

  void Set(std::string key, std::string value);
  void AddLine(std::string line) { lines_.push_back(std::move(line)); }

  bool Has(std::string_view key) const;
  // First value for `key`; throws ParseError when absent.
  const std::string& Get(std::string_view key) const;
  std::vector<std::string> GetAll(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
  const std::vector<std::string>& lines() const { return lines_; }

  std::string ToString() const;
  void WriteFile(const std::filesystem::path& path) const;

 private:
  std::string header_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> lines_;
};

int64_t ParseInt(std::string_view text);
uint64_t ParseUint(std::string_view text);
double ParseDouble(std::string_view text);
std::vector<int64_t> ParseIntCsv(std::string_view text);
std::vector<uint64_t> ParseUintCsv(std::string_view text);

template <typename T>
std::string JoinCsv(std::span<const T> values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

template <typename T>
std::string JoinCsv(const std::vector<T>& values) {
  return JoinCsv(std::span<const T>(values));
}

// Shortest round-trip decimal form of a double.
std::string FormatDouble(double v);

std::string ReadFileToString(const std::filesystem::path& path);
void WriteStringToFile(const std::filesystem::path& path, std::string_view data);

}  // namespace latticelab

#endif  // LATTICELAB_TEXTIO_H_
