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
#include "latticelab/polynomial.h"

#include <charconv>
#include <map>
#include <sstream>

#include "latticelab/error.h"
#include "latticelab/zq.h"

namespace latticelab {

IntPolynomial::IntPolynomial(std::vector<int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  Trim();
}

void IntPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::Monomial(int degree, int64_t coeff) {
  std::vector<int64_t> c(static_cast<size_t>(degree) + 1, 0);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::XnPlusOne(int n) {
  std::vector<int64_t> c(static_cast<size_t>(n) + 1, 0);
  c.front() = 1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::IsXnPlusOne() const {
  if (degree() < 1 || coeffs_.front() != 1 || coeffs_.back() != 1) return false;
  for (size_t i = 1; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::Derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<int64_t> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = static_cast<int64_t>(i) * coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::DivideExact(const IntPolynomial& d) const {
  if (!d.is_monic()) {
    throw Error(ErrorCode::kInvalidParams, "divisor must be monic");
  }
  if (is_zero()) return {};
  if (degree() < d.degree()) {
    throw Error(ErrorCode::kInvalidParams, "divisor does not divide");
  }
  std::vector<int64_t> rem = coeffs_;
  std::vector<int64_t> quot(static_cast<size_t>(degree() - d.degree()) + 1, 0);
  for (int i = degree(); i >= d.degree(); --i) {
    int64_t c = rem[static_cast<size_t>(i)];
    quot[static_cast<size_t>(i - d.degree())] = c;
    if (c == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) {
      rem[static_cast<size_t>(i - d.degree() + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
  }
  for (int64_t r : rem) {
    if (r != 0) throw Error(ErrorCode::kInvalidParams, "divisor does not divide");
  }
  return IntPolynomial(std::move(quot));
}

__int128 IntPolynomial::EvaluateAt(int64_t x) const {
  __int128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

uint64_t IntPolynomial::EvaluateMod(uint64_t x, uint64_t m) const {
  uint64_t acc = 0;
  x %= m;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int64_t c = *it % static_cast<int64_t>(m);
    uint64_t cm = static_cast<uint64_t>(c < 0 ? c + static_cast<int64_t>(m) : c);
    acc = (MulMod(acc, x, m) + cm) % m;
  }
  return acc;
}

std::string IntPolynomial::ToCsv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

std::string IntPolynomial::ToString() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int64_t c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) out << a;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial IntPolynomial::ParseCsv(std::string_view text) {
  std::vector<int64_t> coeffs;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int64_t value = 0;
    const char* begin = field.data();
    if (!field.empty() && field.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::kParse, "bad polynomial coefficient '" + std::string(field) + "'");
    }
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial CyclotomicPoly(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidParams, "cyclotomic index must be >= 1");
  std::map<int, IntPolynomial> cache;
  // Divisors in increasing order so each Phi_d is ready before it is used.
  std::vector<int> divisors;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }
  for (int d : divisors) {
    IntPolynomial p = IntPolynomial::Monomial(d) - IntPolynomial{1};
    for (int e : divisors) {
      if (e >= d) break;
      if (d % e == 0) p = p.DivideExact(cache.at(e));
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(m);
}

int64_t EulerPhi(int64_t m) {
  int64_t result = m;
  for (uint64_t p : PrimeFactors(static_cast<uint64_t>(m))) {
    result -= result / static_cast<int64_t>(p);
  }
  return result;
}

}  // namespace latticelab
