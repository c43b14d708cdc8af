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

#include <gtest/gtest.h>

#include <numeric>

#include "latticelab/error.h"

namespace latticelab {
namespace {

TEST(IntPolynomialTest, TrimAndDegree) {
  IntPolynomial p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPolynomial().is_zero());
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_TRUE(IntPolynomial::XnPlusOne(4).IsXnPlusOne());
  EXPECT_FALSE(IntPolynomial({1, 1, 1}).IsXnPlusOne());
}

TEST(IntPolynomialTest, Arithmetic) {
  IntPolynomial a{1, 1};   // x + 1
  IntPolynomial b{-1, 1};  // x - 1
  EXPECT_EQ((a * b).coeffs(), (std::vector<int64_t>{-1, 0, 1}));
  EXPECT_EQ((a + b).coeffs(), (std::vector<int64_t>{0, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(IntPolynomial({5, 3, 2}).Derivative().coeffs(), (std::vector<int64_t>{3, 4}));
}

TEST(IntPolynomialTest, DivideExact) {
  IntPolynomial prod = IntPolynomial{1, 1} * IntPolynomial{2, 0, 1};
  EXPECT_EQ(prod.DivideExact(IntPolynomial{2, 0, 1}).coeffs(), (std::vector<int64_t>{1, 1}));
  EXPECT_THROW(IntPolynomial({1, 0, 1}).DivideExact(IntPolynomial{1, 1}), Error);
}

TEST(IntPolynomialTest, EvaluateAndText) {
  IntPolynomial f{1, 0, 1};
  EXPECT_EQ(f.EvaluateAt(3), 10);
  EXPECT_EQ(f.EvaluateMod(2, 5), 0u);
  EXPECT_EQ(f.ToCsv(), "1,0,1");
  EXPECT_EQ(IntPolynomial::ParseCsv("1,0,1"), f);
  EXPECT_EQ(IntPolynomial::ParseCsv(f.ToCsv()).ToString(), f.ToString());
  EXPECT_THROW(IntPolynomial::ParseCsv("1,x"), Error);
}

TEST(CyclotomicTest, Examples) {
  EXPECT_EQ(CyclotomicPoly(1).coeffs(), (std::vector<int64_t>{-1, 1}));
  EXPECT_EQ(CyclotomicPoly(8).coeffs(), (std::vector<int64_t>{1, 0, 0, 0, 1}));
  // (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1)).
  IntPolynomial x6 = IntPolynomial::Monomial(6) - IntPolynomial{1};
  IntPolynomial oracle =
      x6.DivideExact(IntPolynomial{-1, 1}).DivideExact(IntPolynomial{1, 1}).DivideExact(IntPolynomial{1, 1, 1});
  EXPECT_EQ(CyclotomicPoly(6), oracle);
  EXPECT_EQ(CyclotomicPoly(6).coeffs(), (std::vector<int64_t>{1, -1, 1}));
}

TEST(CyclotomicTest, ProductOverDivisorsIsXmMinusOne) {
  for (int m = 1; m <= 64; ++m) {
    IntPolynomial prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) prod = prod * CyclotomicPoly(d);
    }
    EXPECT_EQ(prod, IntPolynomial::Monomial(m) - IntPolynomial{1}) << m;
    EXPECT_EQ(CyclotomicPoly(m).degree(), EulerPhi(m)) << m;
  }
}

TEST(EulerPhiTest, BruteForce) {
  for (int m = 1; m <= 200; ++m) {
    int count = 0;
    for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    EXPECT_EQ(EulerPhi(m), count);
  }
}

}  // namespace
}  // namespace latticelab
