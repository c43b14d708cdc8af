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
#ifndef LATTICELAB_POLYNOMIAL_H_
#define LATTICELAB_POLYNOMIAL_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace latticelab {

// Polynomial over Z, coefficients lowest degree first. The representation
// is trimmed: no trailing zero coefficients, and the zero polynomial has no
// coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<int64_t> coeffs);
  IntPolynomial(std::initializer_list<int64_t> coeffs)
      : IntPolynomial(std::vector<int64_t>(coeffs)) {}

  static IntPolynomial Monomial(int degree, int64_t coeff = 1);
  // x^n + 1.
  static IntPolynomial XnPlusOne(int n);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  // True iff this is x^n + 1 for n >= 1.
  bool IsXnPlusOne() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial Derivative() const;

  // Exact quotient by a monic divisor. Throws InvalidParams if the divisor
  // is not monic or does not divide.
  IntPolynomial DivideExact(const IntPolynomial& monic_divisor) const;

  // Value at an integer point, exactly (128-bit).
  __int128 EvaluateAt(int64_t x) const;
  // Value at x modulo m, in [0, m).
  uint64_t EvaluateMod(uint64_t x, uint64_t m) const;

  // "1,0,0,0,1" for x^4 + 1.
  std::string ToCsv() const;
  // "x^4 + 1".
  std::string ToString() const;
  // Throws ParseError on malformed input.
  static IntPolynomial ParseCsv(std::string_view text);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void Trim();
  std::vector<int64_t> coeffs_;
};

// Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d of m.
IntPolynomial CyclotomicPoly(int m);

// Euler's totient.
int64_t EulerPhi(int64_t m);

}  // namespace latticelab

#endif  // LATTICELAB_POLYNOMIAL_H_
