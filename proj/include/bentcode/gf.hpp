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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bentcode/error.hpp"

namespace bentcode {

/// An element of F_{p^m} in index form: 0 is zero, i >= 1 is generator^(i-1).
struct FieldElement {
  std::uint32_t index = 0;

  bool is_zero() const { return index == 0; }
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Default cap on q. The environment variable BENTCODE_MAX_Q overrides it.
inline constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 21;
std::uint64_t default_max_q();

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Legendre symbol (a/p) for 1 <= a <= p-1, via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

/// A fully materialized F_{p^m}. Immutable once built; share it through FieldPtr.
///
/// The model is F_p[x]/(modulus) with the lexicographically least monic
/// irreducible modulus (highest coefficient compared first). Elements are
/// numbered in index form; the polynomial form of an element is its
/// coefficient vector read as a base-p integer, constant term least significant.
class FieldCtx {
 public:
  std::uint32_t p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return q_ - 1; }

  /// Coefficients c_0..c_m of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement generator() const { return {q_ > 2 ? 2u : 1u}; }
  FieldElement element(std::uint32_t index) const;

  /// generator^k for any integer k.
  FieldElement gen_pow(std::int64_t k) const;
  /// Embedding of the prime-field residue a mod p.
  FieldElement from_int(std::int64_t a) const;
  FieldElement from_poly(std::uint32_t poly) const;
  std::uint32_t to_poly(FieldElement x) const { return poly_of_[x.index]; }

  /// Discrete log base the generator; x must be nonzero.
  std::uint32_t log(FieldElement x) const;
  FieldElement antilog(std::uint64_t e) const { return {static_cast<std::uint32_t>(e % order()) + 1}; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
  FieldElement mul(FieldElement x, FieldElement y) const {
    if (x.index == 0 || y.index == 0) return {0};
    std::uint32_t e = (x.index - 1) + (y.index - 1);
    if (e >= order()) e -= order();
    return {e + 1};
  }
  FieldElement inv(FieldElement x) const;
  /// x^e with 0^0 = 1 and negative e allowed for nonzero x.
  FieldElement pow(FieldElement x, std::int64_t e) const;
  /// x^(p^j).
  FieldElement frobenius(FieldElement x, int j = 1) const;

  /// Absolute trace to F_p, from the precomputed table.
  std::uint32_t trace(FieldElement x) const { return trace_[x.index]; }
  std::span<const std::uint32_t> trace_table() const { return trace_; }
  /// Sum_{i<m} x^{p^i} evaluated by field arithmetic.
  std::uint32_t trace_direct(FieldElement x) const;
  /// Tr_1^ell(x) for x in the subfield F_{p^ell}; ell must divide m.
  std::uint32_t subfield_trace(FieldElement x, int ell) const;
  bool in_subfield(FieldElement x, int ell) const;

  /// Quadratic character of F_q^x.
  int eta(FieldElement x) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(FieldElement x) const;
  /// If x lies in F_p, its residue; otherwise -1.
  std::int64_t as_prime_field(FieldElement x) const;

  /// (q - 1) / (p - 1): the log of every nonzero a in F_p is a multiple of this.
  std::uint32_t prime_subgroup_step() const { return order() / (p_ - 1); }

 private:
  friend std::shared_ptr<const FieldCtx> build_field(std::uint32_t, int, std::uint64_t);
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  int m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> poly_of_;   // index -> polynomial form
  std::vector<std::uint32_t> index_of_;  // polynomial form -> index
  std::vector<std::int64_t> zech_;       // k -> log(1 + g^k), -1 when 1 + g^k = 0
  std::vector<std::uint32_t> trace_;     // index -> Tr(x)
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^m}. Deterministic in (p, m).
FieldPtr build_field(std::uint32_t p, int m, std::uint64_t max_q = default_max_q());

}  // namespace bentcode
