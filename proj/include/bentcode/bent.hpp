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
#include <string>
#include <variant>
#include <vector>

#include "bentcode/cyclotomic.hpp"
#include "bentcode/gf.hpp"

namespace bentcode {

enum class Family { Quadratic, Dillon, HKTernaryMonomial, HKBinomial, CoulterMatthews, Custom };

std::string family_name(Family f);

/// One term c * x^{...} of a trace polynomial; the meaning of `index` depends on the family.
struct Term {
  int index = 0;
  FieldElement coeff;
};

struct QuadraticParams {
  std::vector<Term> terms;  // Tr(c_i x^{p^i + 1})
};
struct DillonParams {
  std::vector<Term> terms;  // Tr(c_i x^{i (p^k - 1)}), 1 <= i <= p^k - 1
  std::uint64_t e = 1;
  FieldElement delta;
  int ell = 1;
};
struct HKTernaryParams {
  int k = 1;
  FieldElement alpha;  // primitive element; c = alpha^{(3^k+1)/4}
  FieldElement c;
};
struct HKBinomialParams {
  int k = 1;
};
struct CoulterMatthewsParams {
  FieldElement c;
  int i = 1;
};
struct CustomParams {
  std::string description;
  std::optional<FieldElement> coeff;  // set for monomials Tr(c x^d)
  std::uint64_t exponent = 0;
};

using FamilyParams =
    std::variant<QuadraticParams, DillonParams, HKTernaryParams, HKBinomialParams, CoulterMatthewsParams, CustomParams>;

/// A total map F_q -> F_p stored as its value table, indexed by FieldElement::index.
struct PAryFunction {
  FieldPtr ctx;
  std::vector<std::uint32_t> values;
  Family family = Family::Custom;
  FamilyParams params = CustomParams{};

  std::uint32_t operator()(FieldElement x) const { return values[x.index]; }
};

/// Sum_i Tr(c_i x^{p^i + 1}), 0 <= i <= floor(m/2). Bentness is not assumed.
PAryFunction make_quadratic(FieldPtr ctx, const std::vector<Term>& terms);
/// Tr(c x^d); 0^d = 0 for every d.
PAryFunction make_monomial(FieldPtr ctx, FieldElement c, std::uint64_t d);
/// Tr(c x^{(3^i+1)/2}) over characteristic 3, i odd, gcd(i, m) = 1.
PAryFunction make_coulter_matthews(FieldPtr ctx, FieldElement c, int i);
/// Sum_i Tr(c_i x^{i(p^k-1)}) + Tr_1^ell(delta x^{(p^m-1)/e}) for m = 2k, e | p^k + 1.
PAryFunction make_dillon(FieldPtr ctx, const std::vector<Term>& terms, std::uint64_t e, FieldElement delta);
/// Tr(x^{p^{3k}+p^{2k}-p^k+1} + x^2) for m = 4k.
PAryFunction make_hk_binomial(FieldPtr ctx);
/// Tr(c x^{(3^m-1)/4 + 3^k + 1}) for p = 3, m = 2k, k odd, c = alpha^{(3^k+1)/4}.
/// alpha defaults to the field generator.
PAryFunction make_hk_ternary_monomial(FieldPtr ctx, std::optional<FieldElement> alpha = std::nullopt);
/// Wraps an arbitrary value table.
PAryFunction from_table(FieldPtr ctx, std::vector<std::uint32_t> values, std::string description = "table");

struct WalshProfile {
  FieldPtr ctx;
  std::vector<CycInt> walsh;
  bool is_bent = false;
  bool is_weakly_regular = false;
  int sign = 0;                      // epsilon, when weakly regular
  std::vector<std::uint32_t> dual;   // f*, when weakly regular
};

struct ScalingWitness {
  int h = 0;
  std::uint32_t a = 0;  // scalar in F_p^x
  FieldElement x;
};

struct RFCertificate {
  bool member = false;
  int h = 0;
  bool zero_at_origin = false;
  /// One failing (a, x) per candidate h, when not a member.
  std::vector<ScalingWitness> failure_witness;
};

/// W_f(beta) = Sum_x zeta^{f(x) + Tr(beta x)} for every beta, as exact cyclotomic integers.
/// workers = 0 uses every hardware thread; the result does not depend on it.
std::vector<CycInt> walsh_transform(const PAryFunction& f, unsigned workers = 0);

/// Bentness, weak regularity, sign and dual, all decided by exact comparison.
WalshProfile analyze(const PAryFunction& f, unsigned workers = 0);
WalshProfile analyze_walsh(FieldPtr ctx, std::vector<CycInt> walsh);

/// Tests f(0) = 0 and f(ax) = a^h f(x) for the even h in [2, 2(p-1)] with gcd(h-1, p-1) = 1.
/// Weak regularity is not part of this check; see analyze().
RFCertificate rf_check(const PAryFunction& f);

/// f* as a function; requires a weakly regular profile.
PAryFunction dual_function(const WalshProfile& profile);

/// 64-bit FNV-1a digest of a value table.
std::uint64_t table_digest(const std::vector<std::uint32_t>& values);

}  // namespace bentcode
