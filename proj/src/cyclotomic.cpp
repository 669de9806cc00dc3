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

#include "bentcode/cyclotomic.hpp"

#include <numeric>

namespace bentcode {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::uint32_t reduce(std::int64_t e, std::uint32_t p) {
  const std::int64_t P = p;
  return static_cast<std::uint32_t>(((e % P) + P) % P);
}

}  // namespace

CycInt CycInt::zero(std::uint32_t p) { return CycInt(p, std::vector<std::int64_t>(p - 1, 0)); }

CycInt CycInt::from_integer(std::uint32_t p, std::int64_t n) {
  return CycInt(p, std::vector<std::int64_t>(p - 1, checked_mul(n, -1)));
}

CycInt CycInt::root_power(std::uint32_t p, std::int64_t e) {
  const std::uint32_t r = reduce(e, p);
  if (r == 0) return from_integer(p, 1);
  CycInt z = zero(p);
  z.c_[r - 1] = 1;
  return z;
}

CycInt CycInt::from_exponent_weights(std::uint32_t p, std::span<const std::int64_t> weights) {
  if (weights.size() != p) throw Error(ErrorCode::InvalidArgument, "expected p exponent weights");
  std::vector<std::int64_t> c(p - 1);
  for (std::uint32_t i = 1; i < p; ++i) c[i - 1] = checked_sub(weights[i], weights[0]);
  return CycInt(p, std::move(c));
}

void CycInt::check_same_prime(const CycInt& o) const {
  if (p_ != o.p_) throw Error(ErrorCode::MixedPrimes, "operands live in different cyclotomic rings");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_prime(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same_prime(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t k) {
  for (auto& v : c_) v = checked_mul(v, k);
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same_prime(b);
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> w(p, 0);
  for (std::uint32_t i = 1; i < p; ++i) {
    if (a.c_[i - 1] == 0) continue;
    for (std::uint32_t j = 1; j < p; ++j) {
      const std::uint32_t e = (i + j) % p;
      w[e] = checked_add(w[e], checked_mul(a.c_[i - 1], b.c_[j - 1]));
    }
  }
  return CycInt::from_exponent_weights(p, w);
}

bool CycInt::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

std::string CycInt::to_string() const {
  if (auto n = as_rational_integer(*this)) return std::to_string(*n);
  std::string out;
  for (std::uint32_t i = 1; i < p_; ++i) {
    const std::int64_t v = c_[i - 1];
    if (v == 0) continue;
    if (!out.empty()) out += v > 0 ? "+" : "-";
    else if (v < 0) out += "-";
    const std::int64_t mag = v < 0 ? -v : v;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "z^" + std::to_string(i);
  }
  return out;
}

CycInt mul_root_power(const CycInt& z, std::int64_t e) {
  const std::uint32_t p = z.p();
  const std::uint32_t r = reduce(e, p);
  if (r == 0) return z;
  std::vector<std::int64_t> w(p, 0);
  for (std::uint32_t i = 1; i < p; ++i) w[(i + r) % p] = z.coeff(i);
  return CycInt::from_exponent_weights(p, w);
}

CycInt galois(std::int64_t a, const CycInt& z) {
  const std::uint32_t p = z.p();
  const std::uint32_t u = reduce(a, p);
  if (u == 0) throw Error(ErrorCode::NonUnit, std::to_string(a) + " is not a unit mod " + std::to_string(p));
  std::vector<std::int64_t> w(p, 0);
  for (std::uint32_t i = 1; i < p; ++i)
    w[static_cast<std::uint64_t>(i) * u % p] = z.coeff(i);
  return CycInt::from_exponent_weights(p, w);
}

CycInt conj(const CycInt& z) { return galois(static_cast<std::int64_t>(z.p()) - 1, z); }

std::int64_t pstar(std::uint32_t p) {
  return ((p - 1) / 2) % 2 == 0 ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
}

CycInt gauss_sum(std::uint32_t p) {
  // Squares mod p by enumeration keeps this independent of the Legendre routine.
  std::vector<bool> square(p, false);
  for (std::uint64_t y = 1; y < p; ++y) square[y * y % p] = true;
  std::vector<std::int64_t> w(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) w[x] = square[x] ? 1 : -1;
  return CycInt::from_exponent_weights(p, w);
}

CycInt sqrt_pstar_pow(std::uint32_t p, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative power of sqrt(p*)");
  CycInt r = CycInt::from_integer(p, 1);
  const std::int64_t ps = pstar(p);
  for (int i = 0; i + 1 < m; i += 2) r *= ps;
  if (m % 2 == 1) r = r * gauss_sum(p);
  return r;
}

CycInt abs_square(const CycInt& z) { return z * conj(z); }

std::optional<std::int64_t> as_rational_integer(const CycInt& z) {
  const auto& c = z.coeffs();
  if (c.empty()) return std::nullopt;
  for (auto v : c)
    if (v != c.front()) return std::nullopt;
  return -c.front();
}

}  // namespace bentcode
