/*
 * Copyright 2026 The bentcode Authors.
 *
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

#include <gtest/gtest.h>

#include <random>

#include "bentcode/cyclotomic.hpp"
#include "support/oracle.hpp"

using namespace bentcode;

namespace {

constexpr double kTol = 1e-6;

void expect_close(std::complex<double> a, std::complex<double> b) {
  EXPECT_NEAR(a.real(), b.real(), kTol * (1 + std::abs(b)));
  EXPECT_NEAR(a.imag(), b.imag(), kTol * (1 + std::abs(b)));
}

CycInt random_element(std::uint32_t p, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-20, 20);
  std::vector<std::int64_t> w(p);
  for (auto& x : w) x = dist(rng);
  return CycInt::from_exponent_weights(p, w);
}

}  // namespace

TEST(CycInt, IntegersAndRootsEvaluate) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (std::int64_t n : {-7, 0, 1, 12})
      expect_close(oracle::evaluate(CycInt::from_integer(p, n)), {static_cast<double>(n), 0});
    for (std::int64_t e = -3; e < 2 * static_cast<std::int64_t>(p); ++e)
      expect_close(oracle::evaluate(CycInt::root_power(p, e)), oracle::zeta_pow(p, e));
    EXPECT_TRUE(CycInt::zero(p).is_zero());
    EXPECT_EQ(CycInt::root_power(p, 0), CycInt::from_integer(p, 1));
  }
}

TEST(CycInt, RingOperationsMatchComplexValues) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycInt a = random_element(p, rng), b = random_element(p, rng);
      const auto va = oracle::evaluate(a), vb = oracle::evaluate(b);
      expect_close(oracle::evaluate(a + b), va + vb);
      expect_close(oracle::evaluate(a - b), va - vb);
      expect_close(oracle::evaluate(a * b), va * vb);
      expect_close(oracle::evaluate(a * 3), va * 3.0);
      expect_close(oracle::evaluate(-a), -va);
      expect_close(oracle::evaluate(conj(a)), std::conj(va));
      expect_close(oracle::evaluate(mul_root_power(a, 2)), va * oracle::zeta_pow(p, 2));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + a), a * b + a * a);
    }
  }
}

TEST(CycInt, RepresentationIsCanonical) {
  // The same value built two ways must compare equal.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::vector<std::int64_t> all_ones(p, 1);
    EXPECT_TRUE(CycInt::from_exponent_weights(p, all_ones).is_zero());
    std::vector<std::int64_t> shifted(p, 4);
    shifted[1] += 1;
    EXPECT_EQ(CycInt::from_exponent_weights(p, shifted), CycInt::root_power(p, 1));
  }
}

TEST(CycInt, GaloisActsOnExponents) {
  std::mt19937 rng(11);
  const std::uint32_t p = 7;
  const CycInt a = random_element(p, rng);
  for (std::int64_t k = 1; k < 7; ++k) {
    EXPECT_EQ(galois(k, CycInt::root_power(p, 1)), CycInt::root_power(p, k));
    EXPECT_EQ(galois(k, a * a), galois(k, a) * galois(k, a));
  }
  EXPECT_EQ(conj(a), galois(p - 1, a));
  try {
    galois(7, a);
    ADD_FAILURE() << "expected NonUnit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnit);
  }
}

TEST(CycInt, GaussSumSquaresToSignedPrime) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const CycInt g = gauss_sum(p);
    EXPECT_EQ(g * g, CycInt::from_integer(p, pstar(p)));
    EXPECT_EQ(pstar(p), p % 4 == 1 ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p));
    // The classical evaluation: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
    const double r = std::sqrt(static_cast<double>(p));
    expect_close(oracle::evaluate(g), p % 4 == 1 ? std::complex<double>(r, 0) : std::complex<double>(0, r));
    EXPECT_EQ(abs_square(g), CycInt::from_integer(p, p));
    for (int m = 0; m < 6; ++m) {
      CycInt power = CycInt::from_integer(p, 1);
      for (int i = 0; i < m; ++i) power = power * g;
      EXPECT_EQ(sqrt_pstar_pow(p, m), power);
    }
  }
}

TEST(CycInt, RationalDetection) {
  EXPECT_EQ(as_rational_integer(CycInt::from_integer(5, -9)), std::optional<std::int64_t>(-9));
  EXPECT_EQ(as_rational_integer(CycInt::zero(5)), std::optional<std::int64_t>(0));
  EXPECT_FALSE(as_rational_integer(CycInt::root_power(5, 1)).has_value());
  EXPECT_FALSE(as_rational_integer(gauss_sum(5)).has_value());  // sqrt(5) is not rational
}

TEST(CycInt, ErrorsAreTyped) {
  try {
    (void)(CycInt::from_integer(3, 1) + CycInt::from_integer(5, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedPrimes);
  }
  try {
    CycInt big = CycInt::from_integer(3, std::int64_t{1} << 62);
    big *= 4;
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}
