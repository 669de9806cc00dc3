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

#include "bentcode/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace bentcode {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::MixedPrimes: return "MixedPrimes";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadExponentIndex: return "BadExponentIndex";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::NotWeaklyRegular: return "NotWeaklyRegular";
    case ErrorCode::NotRFMember: return "NotRFMember";
    case ErrorCode::NotPartitionable: return "NotPartitionable";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::uint64_t default_max_q() {
  if (const char* env = std::getenv("BENTCODE_MAX_Q")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxQ;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  unsigned __int128 r = 1, x = b % mod;
  while (e) {
    if (e & 1) r = r * x % mod;
    x = x * x % mod;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  return static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(a), p - 2, p));
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::int64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: x^{p^m} = x mod g, and gcd(x^{p^{m/l}} - x, g) = 1 for primes l | m.
bool is_irreducible(const Poly& g, std::int64_t p) {
  const int m = static_cast<int>(g.size()) - 1;
  if (m == 1) return true;
  auto frob_power = [&](int times) {
    Poly h{0, 1};
    for (int i = 0; i < times; ++i) h = poly_powmod(h, static_cast<std::uint64_t>(p), g, p);
    return h;
  };
  auto minus_x = [&](Poly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob_power(m)).empty()) return false;
  for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(m))) {
    Poly d = poly_gcd(g, minus_x(frob_power(m / static_cast<int>(l))), p);
    if (d.size() != 1) return false;
  }
  return true;
}

Poly digits(std::uint64_t n, std::int64_t p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len; ++i) {
    out[i] = static_cast<std::int64_t>(n % p);
    n /= p;
  }
  return out;
}

std::uint32_t undigits(const Poly& a, std::int64_t p) {
  std::uint64_t n = 0;
  for (std::size_t i = a.size(); i-- > 0;) n = n * p + static_cast<std::uint64_t>(a[i]);
  return static_cast<std::uint32_t>(n);
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) throw Error(ErrorCode::ZeroArgument, "legendre symbol of 0");
  return powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

FieldPtr build_field(std::uint32_t p, int m, std::uint64_t max_q) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > max_q) throw Error(ErrorCode::DegreeTooLarge, "q exceeds cap " + std::to_string(max_q));
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->m_ = m;
  ctx->q_ = static_cast<std::uint32_t>(q);
  const std::int64_t P = p;

  Poly modulus;
  for (std::uint64_t n = 0; n < q; ++n) {
    Poly g = digits(n, P, m);
    g.push_back(1);
    if (m > 1 && g[0] == 0) continue;
    if (is_irreducible(g, P)) {
      modulus = std::move(g);
      break;
    }
  }
  ctx->modulus_.assign(modulus.begin(), modulus.end());

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen_poly = 0;
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    const Poly c = digits(cand, P, m);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      Poly t = poly_powmod(c, order / r, modulus, P);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_poly = static_cast<std::uint32_t>(cand);
      break;
    }
  }

  ctx->poly_of_.assign(q, 0);
  ctx->index_of_.assign(q, 0);
  Poly g = digits(gen_poly, P, m);
  Poly cur{1};
  for (std::uint64_t e = 0; e < order; ++e) {
    Poly padded = cur;
    padded.resize(m, 0);
    const std::uint32_t poly = undigits(padded, P);
    ctx->poly_of_[e + 1] = poly;
    ctx->index_of_[poly] = static_cast<std::uint32_t>(e + 1);
    cur = poly_mulmod(cur, g, modulus, P);
  }

  // Zech logarithms: 1 + g^k = g^{zech[k]}.
  ctx->zech_.assign(order, -1);
  const std::uint32_t one_poly = ctx->poly_of_[1];
  for (std::uint64_t k = 0; k < order; ++k) {
    Poly a = digits(ctx->poly_of_[k + 1], P, m);
    Poly b = digits(one_poly, P, m);
    for (int i = 0; i < m; ++i) a[i] = (a[i] + b[i]) % P;
    const std::uint32_t idx = ctx->index_of_[undigits(a, P)];
    ctx->zech_[k] = idx == 0 ? -1 : static_cast<std::int64_t>(idx - 1);
  }

  // Trace is F_p-linear, so it is determined by its values on the basis 1, x, ..., x^{m-1}.
  std::vector<std::uint32_t> basis_trace(m);
  for (int i = 0; i < m; ++i) {
    Poly basis(m, 0);
    basis[i] = 1;
    basis_trace[i] = ctx->trace_direct(ctx->from_poly(undigits(basis, P)));
  }
  ctx->trace_.assign(q, 0);
  for (std::uint32_t idx = 0; idx < q; ++idx) {
    std::uint64_t poly = ctx->poly_of_[idx], t = 0;
    for (int i = 0; i < m; ++i) {
      t += (poly % P) * basis_trace[i];
      poly /= P;
    }
    ctx->trace_[idx] = static_cast<std::uint32_t>(t % P);
  }
  return ctx;
}

FieldElement FieldCtx::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return {index};
}

FieldElement FieldCtx::gen_pow(std::int64_t k) const {
  const std::int64_t n = order();
  return antilog(static_cast<std::uint64_t>(((k % n) + n) % n));
}

FieldElement FieldCtx::from_int(std::int64_t a) const {
  const std::int64_t P = p_;
  return {index_of_[static_cast<std::uint32_t>(((a % P) + P) % P)]};
}

FieldElement FieldCtx::from_poly(std::uint32_t poly) const {
  if (poly >= q_) throw Error(ErrorCode::InvalidArgument, "polynomial out of range");
  return {index_of_[poly]};
}

std::uint32_t FieldCtx::log(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroArgument, "log of zero");
  return x.index - 1;
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const std::uint32_t i = x.index - 1, j = y.index - 1;
  const std::uint32_t k = j >= i ? j - i : j + order() - i;
  const std::int64_t z = zech_[k];
  if (z < 0) return {0};
  std::uint64_t e = i + static_cast<std::uint64_t>(z);
  if (e >= order()) e -= order();
  return {static_cast<std::uint32_t>(e) + 1};
}

FieldElement FieldCtx::neg(FieldElement x) const {
  if (x.is_zero()) return x;
  // -1 = g^{(q-1)/2}
  std::uint64_t e = (x.index - 1) + order() / 2;
  if (e >= order()) e -= order();
  return {static_cast<std::uint32_t>(e) + 1};
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of zero");
  return antilog((order() - (x.index - 1)) % order());
}

FieldElement FieldCtx::pow(FieldElement x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorCode::ZeroArgument, "negative power of zero");
    return zero();
  }
  const std::int64_t n = order();
  const std::int64_t r = ((e % n) + n) % n;
  const unsigned __int128 prod = static_cast<unsigned __int128>(x.index - 1) * static_cast<std::uint64_t>(r);
  return antilog(static_cast<std::uint64_t>(prod % static_cast<std::uint64_t>(n)));
}

FieldElement FieldCtx::frobenius(FieldElement x, int j) const {
  std::uint64_t e = 1;
  for (int i = 0; i < j; ++i) e = e * p_ % order();
  return pow(x, static_cast<std::int64_t>(e));
}

std::uint32_t FieldCtx::trace_direct(FieldElement x) const {
  FieldElement acc = zero(), term = x;
  for (int i = 0; i < m_; ++i) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  const std::int64_t r = as_prime_field(acc);
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "trace did not land in F_p");
  return static_cast<std::uint32_t>(r);
}

bool FieldCtx::in_subfield(FieldElement x, int ell) const {
  if (ell <= 0 || m_ % ell != 0) return false;
  FieldElement y = x;
  for (int i = 0; i < ell; ++i) y = pow(y, p_);
  return y == x;
}

std::uint32_t FieldCtx::subfield_trace(FieldElement x, int ell) const {
  if (!in_subfield(x, ell)) throw Error(ErrorCode::InvalidArgument, "element is not in the subfield F_{p^ell}");
  FieldElement acc = zero(), term = x;
  for (int i = 0; i < ell; ++i) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  return static_cast<std::uint32_t>(as_prime_field(acc));
}

int FieldCtx::eta(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroArgument, "quadratic character of zero");
  return (x.index - 1) % 2 == 0 ? 1 : -1;
}

std::uint64_t FieldCtx::element_order(FieldElement x) const {
  const std::uint64_t e = log(x);
  return order() / std::gcd<std::uint64_t>(e, order());
}

std::int64_t FieldCtx::as_prime_field(FieldElement x) const {
  const std::uint32_t poly = poly_of_[x.index];
  return poly < p_ ? static_cast<std::int64_t>(poly) : -1;
}

}  // namespace bentcode
