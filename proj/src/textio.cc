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
#include "latticelab/textio.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "latticelab/error.h"

namespace latticelab {
namespace {

std::string_view Strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T ParseNumber(std::string_view text) {
  text = Strip(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> ParseCsv(std::string_view text) {
  std::vector<T> out;
  text = Strip(text);
  if (text.empty()) return out;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    out.push_back(ParseNumber<T>(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

TextDocument TextDocument::Parse(std::string_view text, std::string_view expected_header) {
  std::vector<std::string_view> raw;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    raw.push_back(Strip(text.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  size_t i = 0;
  while (i < raw.size() && raw[i].empty()) ++i;
  if (i == raw.size() || raw[i] != expected_header) {
    throw Error(ErrorCode::kParse, "expected header '" + std::string(expected_header) + "'");
  }
  TextDocument doc{std::string(expected_header)};
  for (++i; i < raw.size(); ++i) {
    std::string_view line = raw[i];
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    size_t comma = line.find(',');
    if (eq != std::string_view::npos && (comma == std::string_view::npos || eq < comma)) {
      doc.Set(std::string(Strip(line.substr(0, eq))), std::string(Strip(line.substr(eq + 1))));
    } else {
      doc.AddLine(std::string(line));
    }
  }
  return doc;
}

TextDocument TextDocument::ReadFile(const std::filesystem::path& path,
                                    std::string_view expected_header) {
  return Parse(ReadFileToString(path), expected_header);
}

void TextDocument::Set(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

bool TextDocument::Has(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return true;
  }
  return false;
}

const std::string& TextDocument::Get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  throw Error(ErrorCode::kParse, header_ + ": missing field '" + std::string(key) + "'");
}

std::vector<std::string> TextDocument::GetAll(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields_) {
    if (k == key) out.push_back(v);
  }
  return out;
}

std::string TextDocument::ToString() const {
  std::string out = header_ + "\n";
  for (const auto& [k, v] : fields_) out += k + "=" + v + "\n";
  for (const auto& line : lines_) out += line + "\n";
  return out;
}

void TextDocument::WriteFile(const std::filesystem::path& path) const {
  WriteStringToFile(path, ToString());
}

int64_t ParseInt(std::string_view text) { return ParseNumber<int64_t>(text); }
uint64_t ParseUint(std::string_view text) { return ParseNumber<uint64_t>(text); }

double ParseDouble(std::string_view text) {
  std::string s(Strip(text));
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "not a number: '" + s + "'");
  }
}

std::vector<int64_t> ParseIntCsv(std::string_view text) { return ParseCsv<int64_t>(text); }
std::vector<uint64_t> ParseUintCsv(std::string_view text) { return ParseCsv<uint64_t>(text); }

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string ReadFileToString(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteStringToFile(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path.string());
  out << data;
}

}  // namespace latticelab
