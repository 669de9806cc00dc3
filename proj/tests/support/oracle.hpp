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

// Reference implementations used only by the tests. They work on the
// polynomial form directly and share no code with the library.

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "bentcode/cyclotomic.hpp"
#include "bentcode/gf.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // c_0 .. c_{m-1}

inline Poly digits(std::uint32_t v, std::uint32_t p, int m) {
  Poly out(m);
  for (int i = 0; i < m; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

inline std::uint32_t undigits(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

/// Schoolbook product reduced by a monic modulus.
inline Poly mulmod(const Poly& a, const Poly& b, const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    for (int i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - lead) * modulus[i]) % p;
  }
  return Poly(prod.begin(), prod.begin() + m);
}

inline std::uint32_t mul_poly_form(std::uint32_t a, std::uint32_t b, const bentcode::FieldCtx& ctx) {
  const auto p = ctx.p();
  const int m = ctx.m();
  return undigits(mulmod(digits(a, p, m), digits(b, p, m), ctx.modulus(), p), p);
}

inline std::uint32_t add_poly_form(std::uint32_t a, std::uint32_t b, std::uint32_t p, int m) {
  Poly x = digits(a, p, m), y = digits(b, p, m);
  for (int i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
  return undigits(x, p);
}

/// Sum_{i<m} x^{p^i} in polynomial form; the result must be a constant.
inline std::uint32_t trace_poly_form(std::uint32_t x, const bentcode::FieldCtx& ctx) {
  const auto p = ctx.p();
  const int m = ctx.m();
  std::uint32_t acc = 0, power = x;
  for (int i = 0; i < m; ++i) {
    acc = add_poly_form(acc, power, p, m);
    std::uint32_t next = 1;
    for (std::uint32_t k = 0; k < p; ++k) next = mul_poly_form(next, power, ctx);
    power = next;
  }
  return acc;
}

/// True if the monic polynomial (c_0..c_m) has no monic factor of degree 1..m/2.
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t t = v;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      std::vector<std::uint64_t> r(f.begin(), f.end());
      for (int k = m; k >= d; --k) {
        const std::uint64_t lead = r[k];
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p - lead) * g[i]) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

/// Numerical value of a cyclotomic integer, zeta = exp(2 pi i / p).
inline std::complex<double> evaluate(const bentcode::CycInt& z) {
  std::complex<double> acc = 0;
  const double p = z.p();
  for (std::uint32_t i = 1; i < z.p(); ++i)
    acc += static_cast<double>(z.coeff(i)) * std::polar(1.0, 2 * std::numbers::pi * i / p);
  return acc;
}

inline std::complex<double> zeta_pow(std::uint32_t p, std::int64_t e) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(((e % p) + p) % p) / p);
}

}  // namespace oracle
