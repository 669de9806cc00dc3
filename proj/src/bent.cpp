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

#include "bentcode/bent.hpp"

#include <array>
#include <numeric>

#include "bentcode/parallel.hpp"

namespace bentcode {

std::string family_name(Family f) {
  switch (f) {
    case Family::Quadratic: return "quadratic";
    case Family::Dillon: return "dillon";
    case Family::HKTernaryMonomial: return "hk-ternary";
    case Family::HKBinomial: return "hk-binomial";
    case Family::CoulterMatthews: return "coulter-matthews";
    case Family::Custom: return "custom";
  }
  return "custom";
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  unsigned __int128 r = 1 % mod, x = b % mod;
  while (e) {
    if (e & 1) r = r * x % mod;
    x = x * x % mod;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Table of Tr(c x^d) with 0 -> 0.
std::vector<std::uint32_t> monomial_table(const FieldCtx& ctx, FieldElement c, std::uint64_t d) {
  std::vector<std::uint32_t> out(ctx.q(), 0);
  if (c.is_zero()) return out;
  const std::uint64_t n = ctx.order();
  const std::uint64_t dr = d % n;
  const std::uint64_t lc = ctx.log(c);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t e = (lc + static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * dr % n)) % n;
    out[j + 1] = ctx.trace(ctx.antilog(e));
  }
  return out;
}

void accumulate(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& add, std::uint32_t p) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + add[i]) % p;
}

}  // namespace

PAryFunction make_monomial(FieldPtr ctx, FieldElement c, std::uint64_t d) {
  PAryFunction f;
  f.values = monomial_table(*ctx, c, d);
  f.family = Family::Custom;
  f.params = CustomParams{"monomial", c, d};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction make_quadratic(FieldPtr ctx, const std::vector<Term>& terms) {
  const int m = ctx->m();
  std::vector<std::uint32_t> values(ctx->q(), 0);
  for (const auto& t : terms) {
    if (t.index < 0 || t.index > m / 2)
      throw Error(ErrorCode::BadExponentIndex, "quadratic term index must lie in [0, floor(m/2)]");
    const std::uint64_t d = pow_u64(ctx->p(), t.index) + 1;
    accumulate(values, monomial_table(*ctx, t.coeff, d), ctx->p());
  }
  PAryFunction f;
  f.values = std::move(values);
  f.family = Family::Quadratic;
  f.params = QuadraticParams{terms};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction make_coulter_matthews(FieldPtr ctx, FieldElement c, int i) {
  if (ctx->p() != 3) throw Error(ErrorCode::WrongCharacteristic, "Coulter-Matthews functions need p = 3");
  if (i < 1 || i % 2 == 0 || std::gcd(i, ctx->m()) != 1)
    throw Error(ErrorCode::BadExponent, "need i odd with gcd(i, m) = 1");
  if (c.is_zero()) throw Error(ErrorCode::BadExponent, "coefficient c must be nonzero");
  const std::uint64_t n = ctx->order();
  // (3^i + 1) / 2 mod n, via 3^i mod 2n.
  const std::uint64_t d = (powmod_u64(3, static_cast<std::uint64_t>(i), 2 * n) + 1) / 2 % n;
  PAryFunction f;
  f.values = monomial_table(*ctx, c, d);
  f.family = Family::CoulterMatthews;
  f.params = CoulterMatthewsParams{c, i};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction make_dillon(FieldPtr ctx, const std::vector<Term>& terms, std::uint64_t e, FieldElement delta) {
  const int m = ctx->m();
  if (m % 2 != 0) throw Error(ErrorCode::OddDegree, "Dillon-type functions need even m");
  const int k = m / 2;
  const std::uint32_t p = ctx->p();
  const std::uint64_t pk = pow_u64(p, k);
  if (e == 0 || (pk + 1) % e != 0) throw Error(ErrorCode::BadDivisor, "e must divide p^k + 1");
  int ell = 0;
  for (int l = 1; l <= m; ++l) {
    if (m % l == 0 && (pow_u64(p, l) - 1) % e == 0) {
      ell = l;
      break;
    }
  }
  if (!ctx->in_subfield(delta, ell)) throw Error(ErrorCode::BadDivisor, "delta must lie in F_{p^ell}");

  std::vector<std::uint32_t> values(ctx->q(), 0);
  for (const auto& t : terms) {
    if (t.index < 1 || static_cast<std::uint64_t>(t.index) > pk - 1)
      throw Error(ErrorCode::BadExponentIndex, "Dillon term index must lie in [1, p^k - 1]");
    accumulate(values, monomial_table(*ctx, t.coeff, static_cast<std::uint64_t>(t.index) * (pk - 1)), p);
  }
  if (!delta.is_zero()) {
    const std::uint64_t d = ctx->order() / e;
    for (std::uint32_t idx = 1; idx < ctx->q(); ++idx) {
      const FieldElement y = ctx->mul(delta, ctx->pow(FieldElement{idx}, static_cast<std::int64_t>(d)));
      values[idx] = (values[idx] + ctx->subfield_trace(y, ell)) % p;
    }
  }
  PAryFunction f;
  f.values = std::move(values);
  f.family = Family::Dillon;
  f.params = DillonParams{terms, e, delta, ell};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction make_hk_binomial(FieldPtr ctx) {
  const int m = ctx->m();
  if (m % 4 != 0) throw Error(ErrorCode::BadDegree, "Helleseth-Kholosha binomials need m = 4k");
  const int k = m / 4;
  const std::uint64_t n = ctx->order();
  const std::uint64_t p = ctx->p();
  const std::uint64_t pk = powmod_u64(p, k, n), p2k = powmod_u64(p, 2 * k, n), p3k = powmod_u64(p, 3 * k, n);
  const std::uint64_t d = (p3k + p2k + n - pk + 1) % n;
  std::vector<std::uint32_t> values = monomial_table(*ctx, ctx->one(), d);
  accumulate(values, monomial_table(*ctx, ctx->one(), 2), ctx->p());
  PAryFunction f;
  f.values = std::move(values);
  f.family = Family::HKBinomial;
  f.params = HKBinomialParams{k};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction make_hk_ternary_monomial(FieldPtr ctx, std::optional<FieldElement> alpha) {
  if (ctx->p() != 3) throw Error(ErrorCode::WrongCharacteristic, "the ternary monomial needs p = 3");
  const int m = ctx->m();
  if (m % 2 != 0 || (m / 2) % 2 == 0) throw Error(ErrorCode::BadDegree, "need m = 2k with k odd");
  const int k = m / 2;
  const FieldElement a = alpha.value_or(ctx->generator());
  if (a.is_zero() || ctx->element_order(a) != ctx->order())
    throw Error(ErrorCode::InvalidArgument, "alpha must be a primitive element");
  const std::uint64_t q = ctx->q(), pk = pow_u64(3, k);
  const FieldElement c = ctx->pow(a, static_cast<std::int64_t>((pk + 1) / 4));
  const std::uint64_t d = (q - 1) / 4 + pk + 1;
  PAryFunction f;
  f.values = monomial_table(*ctx, c, d);
  f.family = Family::HKTernaryMonomial;
  f.params = HKTernaryParams{k, a, c};
  f.ctx = std::move(ctx);
  return f;
}

PAryFunction from_table(FieldPtr ctx, std::vector<std::uint32_t> values, std::string description) {
  if (values.size() != ctx->q()) throw Error(ErrorCode::InvalidArgument, "value table must have q entries");
  for (auto v : values)
    if (v >= ctx->p()) throw Error(ErrorCode::InvalidArgument, "values must lie in F_p");
  PAryFunction f;
  f.values = std::move(values);
  f.family = Family::Custom;
  f.params = CustomParams{std::move(description), std::nullopt, 0};
  f.ctx = std::move(ctx);
  return f;
}

std::vector<CycInt> walsh_transform(const PAryFunction& f, unsigned workers) {
  const FieldCtx& ctx = *f.ctx;
  const std::uint32_t p = ctx.p(), q = ctx.q(), n = ctx.order();
  const auto trace = ctx.trace_table();
  std::vector<CycInt> out(q);
  parallel_for(q, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> hist(p);
    for (std::size_t b = begin; b < end; ++b) {
      std::fill(hist.begin(), hist.end(), 0);
      ++hist[f.values[0]];
      if (b == 0) {
        for (std::uint32_t j = 1; j < q; ++j) ++hist[f.values[j]];
      } else {
        // beta * g^j has index ((log beta + j) mod n) + 1.
        const std::uint32_t lb = static_cast<std::uint32_t>(b - 1);
        for (std::uint32_t j = 0; j < n; ++j) {
          std::uint32_t e = lb + j;
          if (e >= n) e -= n;
          std::uint32_t v = f.values[j + 1] + trace[e + 1];
          if (v >= p) v -= p;
          ++hist[v];
        }
      }
      out[b] = CycInt::from_exponent_weights(p, hist);
    }
  });
  return out;
}

WalshProfile analyze_walsh(FieldPtr ctx, std::vector<CycInt> walsh) {
  WalshProfile prof;
  const std::uint32_t p = ctx->p(), q = ctx->q();
  prof.walsh = std::move(walsh);
  prof.ctx = std::move(ctx);

  const CycInt target = CycInt::from_integer(p, q);
  prof.is_bent = true;
  for (const auto& w : prof.walsh) {
    if (abs_square(w) != target) {
      prof.is_bent = false;
      break;
    }
  }
  if (!prof.is_bent) return prof;

  const CycInt g = sqrt_pstar_pow(p, prof.ctx->m());
  std::vector<CycInt> candidates;  // candidates[c] = G^m zeta^c
  for (std::uint32_t c = 0; c < p; ++c) candidates.push_back(mul_root_power(g, c));

  std::vector<std::uint32_t> dual(q);
  int sign = 0;
  for (std::uint32_t b = 0; b < q; ++b) {
    const CycInt& w = prof.walsh[b];
    int s = 0;
    for (std::uint32_t c = 0; c < p && s == 0; ++c) {
      if (w == candidates[c]) {
        s = 1;
        dual[b] = c;
      } else if (w == -candidates[c]) {
        s = -1;
        dual[b] = c;
      }
    }
    if (s == 0 || (sign != 0 && s != sign)) return prof;
    sign = s;
  }
  prof.is_weakly_regular = true;
  prof.sign = sign;
  prof.dual = std::move(dual);
  return prof;
}

WalshProfile analyze(const PAryFunction& f, unsigned workers) {
  return analyze_walsh(f.ctx, walsh_transform(f, workers));
}

RFCertificate rf_check(const PAryFunction& f) {
  const FieldCtx& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  RFCertificate cert;
  cert.zero_at_origin = f.values[0] == 0;
  if (!cert.zero_at_origin) return cert;

  for (int h = 2; h <= 2 * static_cast<int>(p - 1); h += 2) {
    if (std::gcd(h - 1, static_cast<int>(p - 1)) != 1) continue;
    std::optional<ScalingWitness> fail;
    for (std::uint32_t a = 1; a < p && !fail; ++a) {
      const FieldElement ae = ctx.from_int(a);
      const std::uint64_t ah = powmod_u64(a, static_cast<std::uint64_t>(h), p);
      for (std::uint32_t idx = 0; idx < ctx.q(); ++idx) {
        const FieldElement x{idx};
        if (f(ctx.mul(ae, x)) != ah * f(x) % p) {
          fail = ScalingWitness{h, a, x};
          break;
        }
      }
    }
    if (!fail) {
      cert.member = true;
      cert.h = h;
      cert.failure_witness.clear();
      return cert;
    }
    cert.failure_witness.push_back(*fail);
  }
  return cert;
}

PAryFunction dual_function(const WalshProfile& profile) {
  if (!profile.is_weakly_regular) throw Error(ErrorCode::NotWeaklyRegular, "dual needs a weakly regular profile");
  return from_table(profile.ctx, profile.dual, "dual");
}

std::uint64_t table_digest(const std::vector<std::uint32_t>& values) {
  std::uint64_t h = 14695981039346656037ull;
  for (auto v : values) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace bentcode
