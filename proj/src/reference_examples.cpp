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

#include "bentcode/reference_examples.hpp"

#include <numeric>

namespace bentcode {

namespace {

using Form = ReferenceExample::Form;
constexpr auto kZero = SetKind::Zero;
constexpr auto kSq = SetKind::Sq;
constexpr auto kNsq = SetKind::Nsq;

ReferenceExample quad(std::string id, int p, int m, int term, int clog, std::string text,
                      std::vector<SetKind> kinds, bool punctured, std::int64_t n, int k, std::int64_t d,
                      std::string enumerator, int eps) {
  ReferenceExample ex;
  ex.id = std::move(id);
  ex.p = p;
  ex.m = m;
  ex.term_index = term;
  ex.coeff_log = clog;
  ex.function_text = std::move(text);
  ex.kinds = std::move(kinds);
  ex.punctured = punctured;
  ex.n = n;
  ex.k = k;
  ex.d = d;
  ex.enumerator = std::move(enumerator);
  ex.epsilon = eps;
  return ex;
}

std::vector<ReferenceExample> make_list() {
  std::vector<ReferenceExample> v;
  auto hk = quad("ex-252", 3, 6, 0, 7, "Tr(w^7 x^210)", {kNsq, kSq}, false, 252, 6, 162, "1+476z^162+252z^180", 1);
  hk.form = Form::HKTernary;
  v.push_back(hk);
  v.push_back(quad("ex-234", 3, 6, 2, 0, "Tr(x^10)", {kNsq, kSq}, false, 234, 6, 144, "1+234z^144+494z^162", -1));
  v.push_back(quad("ex-6300", 5, 6, 2, 0, "Tr(x^26)", {kNsq, kSq}, false, 6300, 6, 5000, "1+9324z^5000+6300z^5100", -1));
  v.push_back(quad("ex-6200", 5, 6, 2, 1, "Tr(w x^26)", {kNsq, kSq}, false, 6200, 6, 4900, "1+6200z^4900+9424z^5000", 1));
  v.push_back(quad("ex-1200", 5, 5, 0, 0, "Tr(x^2)", {kNsq}, false, 1200, 5, 940, "1+1200z^940+1300z^960+624z^1000", 1));
  v.push_back(quad("ex-1300", 5, 5, 0, 0, "Tr(x^2)", {kSq}, false, 1300, 5, 1000, "1+624z^1000+1200z^1040+1300z^1060", 1));
  v.push_back(quad("ex-60", 3, 5, 0, 1, "Tr(w x^2)", {kNsq}, false, 60, 5, 40, "1+24z^40+40z^48+60z^52", -1));
  v.push_back(quad("ex-40", 3, 5, 0, 1, "Tr(w x^2)", {kSq}, false, 40, 5, 28, "1+40z^28+60z^32+24z^40", -1));
  v.push_back(quad("ex-15", 3, 4, 0, 0, "Tr(x^2)", {kNsq, kSq}, true, 15, 4, 9, "1+50z^9+30z^12", -1));
  v.push_back(quad("ex-12", 3, 4, 0, 1, "Tr(w x^2)", {kNsq, kSq}, true, 12, 4, 6, "1+24z^6+56z^9", 1));
  v.push_back(quad("ex-126", 3, 6, 0, 1, "Tr(w x^2)", {kNsq, kSq}, true, 126, 6, 81, "1+476z^81+252z^90", 1));
  v.push_back(quad("ex-65", 5, 4, 0, 0, "Tr(x^2)", {kNsq, kSq}, true, 65, 4, 50, "1+364z^50+260z^55", -1));
  v.push_back(quad("ex-60-4", 5, 4, 0, 1, "Tr(w x^2)", {kNsq, kSq}, true, 60, 4, 45, "1+240z^45+384z^50", 1));
  v.push_back(quad("ex-36", 3, 5, 0, 0, "Tr(x^2)", {kNsq}, true, 36, 5, 21, "1+72z^21+90z^24+80z^27", 1));
  v.push_back(quad("ex-45", 3, 5, 0, 1, "Tr(w x^2)", {kNsq}, true, 45, 5, 27, "1+80z^27+72z^30+90z^33", -1));
  v.push_back(quad("ex-6", 3, 3, 0, 1, "Tr(w x^2)", {kSq}, true, 6, 3, 3, "1+8z^3+6z^4+12z^5", -1));
  v.push_back(quad("ex-10", 5, 3, 0, 1, "Tr(w x^2)", {kSq}, true, 10, 3, 7, "1+40z^7+60z^8+24z^10", -1));
  v.push_back(quad("ex-21", 7, 3, 0, 0, "Tr(x^2)", {kSq}, true, 21, 3, 17, "1+126z^17+168z^18+48z^21", 1));
  (void)kZero;
  return v;
}

std::string params_string(const CodeSummary& cs) {
  return "[" + std::to_string(cs.n) + "," + std::to_string(cs.k) + "," + std::to_string(cs.d) + "]";
}

struct Attempt {
  bool codes_match = true;
  int epsilon = 0;
  std::vector<CodeSummary> codes;
};

Attempt attempt(const ReferenceExample& ex, const FieldPtr& ctx, std::int64_t w_log, unsigned workers) {
  const PAryFunction f = build_example_function(ex, ctx, w_log);
  Attempt a;
  a.epsilon = analyze(f, workers).sign;
  for (SetKind kind : ex.kinds) {
    CodeSummary cs = build_code(defining_set(f, kind, ex.punctured), workers);
    a.codes_match = a.codes_match && cs.n == ex.n && cs.k == ex.k && cs.d == ex.d &&
                    weight_enumerator_string(cs) == ex.enumerator;
    a.codes.push_back(std::move(cs));
  }
  return a;
}

}  // namespace

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> list = make_list();
  return list;
}

const ReferenceExample& find_example(const std::string& id) {
  for (const auto& ex : reference_examples())
    if (ex.id == id) return ex;
  throw Error(ErrorCode::InvalidArgument, "unknown example id '" + id + "'");
}

PAryFunction build_example_function(const ReferenceExample& ex, const FieldPtr& ctx, std::int64_t w_log) {
  const FieldElement w = ctx->gen_pow(w_log);
  if (ex.form == Form::HKTernary) return make_hk_ternary_monomial(ctx, w);
  return make_quadratic(ctx, {Term{ex.term_index, ctx->pow(w, static_cast<std::uint64_t>(ex.coeff_log))}});
}

ExampleOutcome run_example(const ReferenceExample& ex, unsigned workers) {
  const FieldPtr ctx = build_field(static_cast<std::uint32_t>(ex.p), ex.m);
  ExampleOutcome out;
  out.id = ex.id;

  Attempt first = attempt(ex, ctx, 1, workers);
  out.candidates_tried = 1;
  const bool depends_on_w = ex.form == Form::HKTernary || ex.coeff_log != 0;
  Attempt chosen = first;
  std::int64_t chosen_log = 1;
  if (!first.codes_match && depends_on_w) {
    const std::int64_t order = ctx->order();
    for (std::int64_t u = 2; u < order; ++u) {
      if (std::gcd(u, order) != 1) continue;
      ++out.candidates_tried;
      Attempt a = attempt(ex, ctx, u, workers);
      if (a.codes_match) {
        chosen = std::move(a);
        chosen_log = u;
        break;
      }
    }
  }

  out.w_log = chosen_log;
  out.observed_epsilon = chosen.epsilon;
  out.codes = std::move(chosen.codes);
  out.pass = chosen.codes_match && chosen.epsilon == ex.epsilon;
  if (!chosen.codes_match) {
    out.detail = "expected " + std::string("[") + std::to_string(ex.n) + "," + std::to_string(ex.k) + "," +
                 std::to_string(ex.d) + "] " + ex.enumerator + "; observed";
    for (const auto& cs : out.codes)
      out.detail += " " + to_string(cs.set_kind) + " " + params_string(cs) + " " + weight_enumerator_string(cs);
    if (out.candidates_tried > 1)
      out.detail += " (no match over " + std::to_string(out.candidates_tried) + " primitive elements)";
  } else if (chosen.epsilon != ex.epsilon) {
    out.detail = "epsilon expected " + std::to_string(ex.epsilon) + ", observed " + std::to_string(chosen.epsilon);
  }
  return out;
}

}  // namespace bentcode
