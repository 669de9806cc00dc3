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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcode/error.hpp"

namespace bentcode {

/// An exact element of Z[zeta_p], stored in the integral basis zeta^1, ..., zeta^{p-1}.
///
/// The representation is canonical, so equality is coefficient equality. The
/// rational integer n is stored as (-n, ..., -n) because 1 = -(zeta + ... + zeta^{p-1}).
/// Coefficients are 64-bit; every operation checks for overflow.
class CycInt {
 public:
  CycInt() = default;
  static CycInt zero(std::uint32_t p);
  static CycInt from_integer(std::uint32_t p, std::int64_t n);
  /// zeta^e for any integer e.
  static CycInt root_power(std::uint32_t p, std::int64_t e);
  /// Sum_e weights[e] zeta^e over e = 0..p-1 (length-p redundant form).
  static CycInt from_exponent_weights(std::uint32_t p, std::span<const std::int64_t> weights);

  std::uint32_t p() const { return p_; }
  /// Coefficient of zeta^i, 1 <= i <= p-1.
  std::int64_t coeff(std::uint32_t i) const { return c_[i - 1]; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(std::int64_t k);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, std::int64_t k) { return a *= k; }
  friend CycInt operator*(std::int64_t k, CycInt a) { return a *= k; }
  friend CycInt operator-(CycInt a) { return a *= -1; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt&, const CycInt&) = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  CycInt(std::uint32_t p, std::vector<std::int64_t> c) : p_(p), c_(std::move(c)) {}
  void check_same_prime(const CycInt& o) const;

  std::uint32_t p_ = 0;
  std::vector<std::int64_t> c_;
};

/// z * zeta^e, computed by rotating exponents.
CycInt mul_root_power(const CycInt& z, std::int64_t e);

/// The automorphism sigma_a: zeta -> zeta^a; a must be a unit mod p.
CycInt galois(std::int64_t a, const CycInt& z);
/// Complex conjugation, i.e. sigma_{p-1}.
CycInt conj(const CycInt& z);

/// Sum_{x in F_p^x} (x/p) zeta^x; its square is p* = (-1)^{(p-1)/2} p.
CycInt gauss_sum(std::uint32_t p);
/// gauss_sum(p)^m, the exact value of sqrt(p*)^m.
CycInt sqrt_pstar_pow(std::uint32_t p, int m);
/// p* = (-1)^{(p-1)/2} p.
std::int64_t pstar(std::uint32_t p);

/// z * conj(z).
CycInt abs_square(const CycInt& z);
/// The integer n if z is the canonical form of n, otherwise nullopt.
std::optional<std::int64_t> as_rational_integer(const CycInt& z);

}  // namespace bentcode
