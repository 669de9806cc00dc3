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

#include "bentcode/codes.hpp"

#include <algorithm>

#include "bentcode/parallel.hpp"

namespace bentcode {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Zero: return "zero";
    case SetKind::Sq: return "sq";
    case SetKind::Nsq: return "nsq";
  }
  return "zero";
}

SetKind parse_set_kind(const std::string& text) {
  if (text == "zero") return SetKind::Zero;
  if (text == "sq") return SetKind::Sq;
  if (text == "nsq") return SetKind::Nsq;
  throw Error(ErrorCode::InvalidArgument, "unknown set kind '" + text + "'");
}

std::string element_to_string(const FieldCtx& ctx, FieldElement x) {
  if (x.is_zero()) return "0";
  return "g" + std::to_string(ctx.log(x));
}

namespace {

nlohmann::ordered_json terms_json(const FieldCtx& ctx, const std::vector<Term>& terms) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : terms) arr.push_back({t.index, element_to_string(ctx, t.coeff)});
  return arr;
}

}  // namespace

FunctionTag tag_of(const PAryFunction& f) {
  const FieldCtx& ctx = *f.ctx;
  FunctionTag tag{family_name(f.family), nlohmann::ordered_json::object()};
  auto& j = tag.params;
  std::visit(
      [&](const auto& prm) {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, QuadraticParams>) {
          j["terms"] = terms_json(ctx, prm.terms);
        } else if constexpr (std::is_same_v<T, DillonParams>) {
          j["terms"] = terms_json(ctx, prm.terms);
          j["e"] = prm.e;
          j["delta"] = element_to_string(ctx, prm.delta);
          j["ell"] = prm.ell;
        } else if constexpr (std::is_same_v<T, HKTernaryParams>) {
          j["k"] = prm.k;
          j["alpha"] = element_to_string(ctx, prm.alpha);
          j["c"] = element_to_string(ctx, prm.c);
        } else if constexpr (std::is_same_v<T, HKBinomialParams>) {
          j["k"] = prm.k;
        } else if constexpr (std::is_same_v<T, CoulterMatthewsParams>) {
          j["c"] = element_to_string(ctx, prm.c);
          j["i"] = prm.i;
        } else {
          j["description"] = prm.description;
          if (prm.coeff) {
            j["c"] = element_to_string(ctx, *prm.coeff);
            j["exponent"] = prm.exponent;
          }
        }
      },
      f.params);
  return tag;
}

bool matches_kind(std::uint32_t v, std::uint32_t p, SetKind kind) {
  if (kind == SetKind::Zero) return v == 0;
  if (v == 0) return false;
  const bool square = legendre(v, p) == 1;
  return kind == SetKind::Sq ? square : !square;
}

DefiningSet defining_set(const PAryFunction& f, SetKind kind, bool punctured) {
  const FieldCtx& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  std::vector<bool> member(ctx.q(), false);
  for (std::uint32_t idx = 1; idx < ctx.q(); ++idx) member[idx] = matches_kind(f.values[idx], p, kind);

  DefiningSet set{f.ctx, kind, punctured, {}, tag_of(f)};
  if (!punctured) {
    for (std::uint32_t idx = 1; idx < ctx.q(); ++idx)
      if (member[idx]) set.elements.push_back({idx});
    return set;
  }

  // F_p^x = <g^step>, so the orbit of g^j is {g^{j + t*step}} and its
  // smallest-log member has log j mod step.
  const std::uint32_t step = ctx.prime_subgroup_step();
  for (std::uint32_t j = 0; j < step; ++j) {
    const bool first = member[j + 1];
    for (std::uint32_t t = 1; t < p - 1; ++t) {
      if (member[j + t * step + 1] != first)
        throw Error(ErrorCode::NotPartitionable, "defining set is not a union of F_p^x orbits");
    }
    if (first) set.elements.push_back({j + 1});
  }
  return set;
}

CodeSummary build_code(const DefiningSet& set, unsigned workers) {
  if (set.elements.empty()) throw Error(ErrorCode::EmptySet, "defining set is empty");
  const FieldCtx& ctx = *set.ctx;
  const std::uint32_t q = ctx.q(), ord = ctx.order();
  const auto trace = ctx.trace_table();
  const std::int64_t n = static_cast<std::int64_t>(set.elements.size());

  std::vector<std::uint32_t> logs;
  logs.reserve(set.elements.size());
  for (auto d : set.elements) logs.push_back(ctx.log(d));

  // weights[b] for beta index b; beta = 0 is the zero codeword.
  std::vector<std::int64_t> weights(q, 0);
  parallel_for(q - 1, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const std::uint32_t lb = static_cast<std::uint32_t>(j);
      std::int64_t zeros = 0;
      for (std::uint32_t ld : logs) {
        std::uint32_t e = lb + ld;
        if (e >= ord) e -= ord;
        zeros += trace[e + 1] == 0;
      }
      weights[j + 1] = n - zeros;
    }
  });

  std::map<std::int64_t, std::int64_t> dist;
  for (auto w : weights) ++dist[w];

  CodeSummary cs;
  cs.p = static_cast<int>(ctx.p());
  cs.m = ctx.m();
  cs.source = set.source;
  cs.set_kind = set.kind;
  cs.punctured = set.punctured;
  cs.n = n;

  // The codeword map is F_p-linear; its kernel is the set of beta with weight 0.
  const std::int64_t kernel = dist[0];
  int kernel_dim = 0;
  for (std::int64_t s = kernel; s > 1; s /= ctx.p()) ++kernel_dim;
  cs.k = ctx.m() - kernel_dim;
  cs.degenerate = kernel > 1;
  for (auto& [w, a] : dist) a /= kernel;
  cs.weight_distribution = std::move(dist);
  cs.d = 0;
  for (const auto& [w, a] : cs.weight_distribution) {
    if (w > 0 && a > 0) {
      cs.d = w;
      break;
    }
  }
  return cs;
}

std::string weight_enumerator_string(const CodeSummary& cs) {
  std::string out = "1";
  for (const auto& [w, a] : cs.weight_distribution) {
    if (w == 0 || a == 0) continue;
    out += "+" + std::to_string(a) + "z^" + std::to_string(w);
  }
  return out;
}

std::int64_t count_oracle(const PAryFunction& f, FieldElement beta, SetKind predicate) {
  const FieldCtx& ctx = *f.ctx;
  std::int64_t count = 0;
  for (std::uint32_t idx = 0; idx < ctx.q(); ++idx) {
    const FieldElement x{idx};
    if (matches_kind(f(x), ctx.p(), predicate) && ctx.trace(ctx.mul(beta, x)) == 0) ++count;
  }
  return count;
}

nlohmann::ordered_json to_json(const CodeSummary& cs) {
  nlohmann::ordered_json j;
  j["p"] = cs.p;
  j["m"] = cs.m;
  j["family"] = cs.source.family;
  j["params"] = cs.source.params;
  j["set_kind"] = to_string(cs.set_kind);
  j["punctured"] = cs.punctured;
  j["n"] = cs.n;
  j["k"] = cs.k;
  j["d"] = cs.d;
  auto dist = nlohmann::ordered_json::array();
  for (const auto& [w, a] : cs.weight_distribution) dist.push_back({w, a});
  j["distribution"] = dist;
  if (cs.degenerate) j["degenerate"] = true;
  return j;
}

}  // namespace bentcode
