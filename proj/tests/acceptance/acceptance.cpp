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

// Acceptance runner. Prints one PASS/FAIL line per checked item and a summary
// line per criterion; exits non-zero if any selected criterion failed.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bentcode/bent.hpp"
#include "bentcode/codes.hpp"
#include "bentcode/predict.hpp"
#include "bentcode/reference_examples.hpp"
#include "json.hpp"

using namespace bentcode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}

  void check(bool ok, const std::string& item, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " [c" << id_ << "] " << item;
    if (!detail.empty()) std::cout << " | " << detail;
    std::cout << '\n';
    ok_ = ok_ && ok;
    ++count_;
  }
  void note(const std::string& text) { std::cout << "NOTE [c" << id_ << "] " << text << '\n'; }

  bool finish() {
    std::cout << "CRITERION " << id_ << ": " << (ok_ && count_ > 0 ? "PASS" : "FAIL") << " (" << count_
              << " checks)\n";
    return ok_ && count_ > 0;
  }

 private:
  int id_;
  bool ok_ = true;
  int count_ = 0;
};

std::string describe(const PAryFunction& f) {
  const FunctionTag tag = tag_of(f);
  return "p=" + std::to_string(f.ctx->p()) + " m=" + std::to_string(f.ctx->m()) + " " + tag.family + " " +
         tag.params.dump();
}

std::string params(const CodeSummary& cs) {
  return "[" + std::to_string(cs.n) + "," + std::to_string(cs.k) + "," + std::to_string(cs.d) + "] " +
         weight_enumerator_string(cs);
}

// ---------------------------------------------------------------- instances

struct Instance {
  PAryFunction f;
  std::optional<int> stated_sign;  // from a published example
};

std::vector<Instance> example_instances() {
  std::vector<Instance> out;
  std::set<std::string> seen;
  for (const auto& ex : reference_examples()) {
    const std::string key = std::to_string(ex.p) + "/" + std::to_string(ex.m) + "/" + ex.function_text;
    if (!seen.insert(key).second) continue;
    auto ctx = build_field(static_cast<std::uint32_t>(ex.p), ex.m);
    out.push_back({build_example_function(ex, ctx, 1), ex.epsilon});
  }
  return out;
}

// Dillon-type candidates: a single term c x^{i(p^k-1)} for i in {1, 2, 3} and
// c = g^0 .. g^11, plus a two-term family; every divisor e of p^k + 1, delta in {0, 1}.
std::vector<PAryFunction> dillon_candidates(std::uint32_t p, int m) {
  auto ctx = build_field(p, m);
  std::uint64_t pk = 1;
  for (int i = 0; i < m / 2; ++i) pk *= p;
  std::vector<PAryFunction> out;
  for (std::uint64_t e = 1; e <= pk + 1; ++e) {
    if ((pk + 1) % e != 0) continue;
    for (int delta : {0, 1}) {
      const FieldElement d = delta ? ctx->one() : ctx->zero();
      for (int clog = 0; clog < 12; ++clog) {
        const FieldElement c = ctx->gen_pow(clog);
        for (int i = 1; i <= 3 && static_cast<std::uint64_t>(i) < pk; ++i) out.push_back(make_dillon(ctx, {Term{i, c}}, e, d));
        if (pk > 2) out.push_back(make_dillon(ctx, {Term{1, c}, Term{2, ctx->one()}}, e, d));
      }
    }
  }
  return out;
}

std::vector<PAryFunction> family_instances() {
  std::vector<PAryFunction> out;
  for (auto [p, m] : {std::pair{3u, 4}, {5u, 2}, {7u, 2}, {5u, 4}})
    for (auto& f : dillon_candidates(p, m)) out.push_back(std::move(f));
  for (int m : {2, 6}) out.push_back(make_hk_ternary_monomial(build_field(3, m)));
  for (std::uint32_t p : {3u, 5u}) out.push_back(make_hk_binomial(build_field(p, 4)));
  for (auto [m, i] : {std::pair{5, 3}, {7, 3}, {7, 5}}) {
    auto ctx = build_field(3, m);
    for (int clog : {0, 1}) out.push_back(make_coulter_matthews(ctx, ctx->gen_pow(clog), i));
  }
  return out;
}

// ---------------------------------------------------------------- criteria

bool criterion1(unsigned workers) {
  Criterion c(1);
  const auto t0 = Clock::now();
  for (const auto& ex : reference_examples()) {
    const auto o = run_example(ex, workers);
    std::string detail = "w=g" + std::to_string(o.w_log);
    for (const auto& cs : o.codes) detail += " " + to_string(cs.set_kind) + " " + params(cs);
    if (!o.pass) detail += " | " + o.detail;
    c.check(o.pass, ex.id + " p=" + std::to_string(ex.p) + " m=" + std::to_string(ex.m) + " " + ex.function_text,
            detail);
    if (!o.pass && ex.p == 3 && ex.m == 5) {
      // The stated values have 125 = 5^3 codewords; compare with the same construction over F_{5^3}.
      auto ctx = build_field(5, 3);
      const auto g = build_example_function(ex, ctx, 1);
      for (SetKind kind : ex.kinds) {
        const auto cs = build_code(defining_set(g, kind, ex.punctured), workers);
        c.note(ex.id + ": same function over p=5 m=3, set " + to_string(kind) + " gives " + params(cs) +
               (cs.n == ex.n && weight_enumerator_string(cs) == ex.enumerator
                    ? " (the stated n, d and enumerator, with k = " + std::to_string(cs.k) + ")"
                    : ""));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  c.check(elapsed < 300.0, "total runtime", std::to_string(elapsed) + " s (target < 300 s)");
  return c.finish();
}

bool criterion2(unsigned workers) {
  Criterion c(2);
  for (const auto& inst : example_instances()) {
    const auto prof = analyze(inst.f, workers);
    c.check(prof.is_weakly_regular && prof.sign == *inst.stated_sign, "example " + describe(inst.f),
            "stated " + std::to_string(*inst.stated_sign) + ", observed " + std::to_string(prof.sign));
  }
  std::map<std::string, int> bent_per_field;
  for (const auto& f : family_instances()) {
    const auto prof = analyze(f, workers);
    const std::string field = family_name(f.family) + " p=" + std::to_string(f.ctx->p()) +
                              " m=" + std::to_string(f.ctx->m());
    bent_per_field[field] += prof.is_bent;
    if (!prof.is_bent) continue;  // non-bent Dillon parameters are expected and not a sign claim
    const int expected = predict_sign(f);
    c.check(prof.is_weakly_regular && prof.sign == expected, "family " + describe(f),
            "predicted " + std::to_string(expected) + ", observed " + std::to_string(prof.sign));
  }
  for (const auto& [field, n] : bent_per_field) c.check(n > 0, "bent instances found for " + field, std::to_string(n));

  // F_9 is the one Dillon field where W(0) = p^k does not force a positive sign.
  int agree = 0, disagree = 0;
  for (const auto& f : dillon_candidates(3, 2)) {
    const auto prof = analyze(f, workers);
    if (!prof.is_weakly_regular) continue;
    (prof.sign == predict_sign(f) ? agree : disagree)++;
  }
  c.note("Dillon p=3 m=2 (not in the graded set): " + std::to_string(agree) + " bent instances agree with the sign rule, " +
         std::to_string(disagree) + " do not");
  return c.finish();
}

bool criterion3(unsigned workers) {
  Criterion c(3);
  std::vector<PAryFunction> functions;
  for (auto& inst : example_instances()) functions.push_back(std::move(inst.f));
  for (auto& f : family_instances()) functions.push_back(std::move(f));
  for (const auto& f : functions) {
    const auto prof = analyze(f, workers);
    if (!prof.is_weakly_regular || !rf_check(f).member) continue;
    const int m = f.ctx->m();
    for (SetKind kind : {SetKind::Zero, SetKind::Sq, SetKind::Nsq}) {
      for (bool punctured : {false, true}) {
        const TableId id = table_for(kind, punctured, m);
        const auto pd = predict_distribution(id, static_cast<int>(f.ctx->p()), m, prof.sign);
        const auto set = defining_set(f, kind, punctured);
        const DistributionDiff diff = set.elements.empty() ? compare_empty(pd) : compare(pd, build_code(set, workers));
        c.check(diff.match, describe(f) + " " + to_string(id) + " (" + to_string(kind) + ")", diff.detail);
      }
    }
  }
  return c.finish();
}

const std::vector<std::pair<std::uint32_t, int>> kGrid{{3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}};

bool criterion4(unsigned workers) {
  Criterion c(4);
  for (auto [p, m] : kGrid) {
    auto ctx = build_field(p, m);
    for (int clog : {0, 1}) {
      const auto f = make_quadratic(ctx, {Term{0, ctx->gen_pow(clog)}});
      for (const auto& r : verify_lemmas(f, workers)) c.check(r.match, describe(f) + " " + to_json(r).dump());
    }
    const auto q = verify_quadratic_sum(ctx, workers);
    c.check(q.match, "p=" + std::to_string(p) + " m=" + std::to_string(m) + " " + to_json(q).dump());
  }
  return c.finish();
}

bool field_axioms(const FieldCtx& ctx) {
  const std::uint32_t q = ctx.q();
  for (std::uint32_t i = 0; i < q; ++i) {
    const FieldElement x{i};
    if (ctx.add(x, ctx.neg(x)) != ctx.zero() || ctx.mul(x, ctx.one()) != x) return false;
    if (i != 0 && ctx.mul(x, ctx.inv(x)) != ctx.one()) return false;
    for (std::uint32_t j = 0; j < q; ++j) {
      const FieldElement y{j};
      if (ctx.add(x, y) != ctx.add(y, x) || ctx.mul(x, y) != ctx.mul(y, x)) return false;
      for (std::uint32_t k = 0; k < q; ++k) {
        const FieldElement z{k};
        if (ctx.add(ctx.add(x, y), z) != ctx.add(x, ctx.add(y, z))) return false;
        if (ctx.mul(ctx.mul(x, y), z) != ctx.mul(x, ctx.mul(y, z))) return false;
        if (ctx.mul(x, ctx.add(y, z)) != ctx.add(ctx.mul(x, y), ctx.mul(x, z))) return false;
      }
    }
  }
  return true;
}

bool criterion5(unsigned workers) {
  Criterion c(5);
  for (auto [p, m] : kGrid) {
    auto ctx = build_field(p, m);
    const std::string field = "p=" + std::to_string(p) + " m=" + std::to_string(m);
    c.check(field_axioms(*ctx), field + " field axioms (exhaustive)");
    for (int clog : {0, 1}) {
      const auto f = make_quadratic(ctx, {Term{0, ctx->gen_pow(clog)}});
      const std::string name = describe(f);
      const auto prof = analyze(f, workers);
      const std::uint32_t q = ctx->q();

      CycInt energy = CycInt::zero(p);
      for (const auto& w : prof.walsh) energy += abs_square(w);
      c.check(energy == CycInt::from_integer(p, std::int64_t{q} * q), name + " Parseval");

      bool inversion = true;
      for (std::uint32_t x : {0u, 1u, q / 2, q - 1}) {
        CycInt acc = CycInt::zero(p);
        for (std::uint32_t b = 0; b < q; ++b)
          acc += mul_root_power(prof.walsh[b], -static_cast<std::int64_t>(ctx->trace(ctx->mul({b}, {x}))));
        inversion = inversion && acc == CycInt::root_power(p, f.values[x]) * q;
      }
      c.check(inversion, name + " inversion formula at 4 points");

      if (!prof.is_weakly_regular) {
        c.check(false, name + " weakly regular");
        continue;
      }
      c.check(prof.dual[0] == 0, name + " f*(0) = 0");
      const auto dual = dual_function(prof);
      const auto dual_prof = analyze(dual, workers);
      bool involution = dual_prof.is_weakly_regular;
      for (std::uint32_t x = 0; involution && x < q; ++x)
        involution = dual_prof.dual[x] == f.values[ctx->neg({x}).index];
      c.check(involution, name + " f**(x) = f(-x)");
      const int s = p % 4 == 1 ? 1 : -1;
      const int expected_sign = (m % 2 == 0 ? 1 : s) * prof.sign;
      c.check(dual_prof.sign == expected_sign, name + " dual sign",
              "expected " + std::to_string(expected_sign) + ", observed " + std::to_string(dual_prof.sign));
      c.check(rf_check(dual).member, name + " dual is in RF");

      for (SetKind kind : {SetKind::Zero, SetKind::Sq, SetKind::Nsq}) {
        const auto full_set = defining_set(f, kind, false);
        if (full_set.elements.empty()) continue;
        const auto full = build_code(full_set, workers);
        const auto bar = build_code(defining_set(f, kind, true), workers);
        std::map<std::int64_t, std::int64_t> scaled;
        for (const auto& [w, a] : bar.weight_distribution) scaled[w * (p - 1)] = a;
        c.check(full.weight_distribution == scaled && full.n == bar.n * (p - 1),
                name + " puncturing divides weights (" + to_string(kind) + ")");
      }
    }
  }
  return c.finish();
}

bool criterion6() {
  Criterion c(6);
  struct Row {
    std::int64_t n, k, d, p;
  };
  for (const Row& r : {Row{15, 4, 9, 3}, Row{126, 6, 81, 3}, Row{65, 4, 50, 5}, Row{6, 3, 3, 3}, Row{10, 3, 7, 5},
                       Row{21, 3, 17, 7}}) {
    const auto st = griesmer(r.n, r.k, r.d, r.p);
    c.check(st.next_d_excluded,
            "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "] p=" +
                std::to_string(r.p) + " d+1 excluded",
            "g(k,d+1)=" + std::to_string(griesmer_bound(r.k, r.d + 1, r.p)));
  }
  const auto st = griesmer(12, 4, 6, 3);
  c.check(!st.next_d_excluded, "[12,4,6] p=3 reported NOT certified",
          "g(4,7)=" + std::to_string(griesmer_bound(4, 7, 3)) + " <= 12");
  return c.finish();
}

std::string big_job_report(unsigned workers) {
  auto ctx = build_field(5, 6);
  const auto f = make_quadratic(ctx, {Term{2, ctx->one()}});
  const auto prof = analyze(f, workers);
  nlohmann::ordered_json j;
  std::uint64_t walsh_digest = 1469598103934665603ull;
  for (const auto& w : prof.walsh)
    for (auto v : w.coeffs()) walsh_digest = (walsh_digest ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
  j["walsh_digest"] = walsh_digest;
  j["epsilon"] = prof.sign;
  j["dual_digest"] = table_digest(prof.dual);
  j["rf_h"] = rf_check(f).h;
  for (SetKind kind : {SetKind::Nsq, SetKind::Sq})
    j["codes"].push_back(to_json(build_code(defining_set(f, kind, false), workers)));
  return j.dump();
}

bool criterion7() {
  Criterion c(7);
  auto t0 = Clock::now();
  const std::string single = big_job_report(1);
  const double serial = seconds_since(t0);
  c.check(serial < 120.0, "p=5 m=6 Walsh analysis + two code builds, 1 worker",
          std::to_string(serial) + " s (limit 120 s)");
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  t0 = Clock::now();
  const std::string parallel = big_job_report(hw);
  c.check(parallel == single, "byte-identical report with " + std::to_string(hw) + " workers",
          std::to_string(seconds_since(t0)) + " s");
  c.check(big_job_report(3) == single, "byte-identical report with 3 workers");
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  unsigned workers = 0;
  app.add_option("--criterion", only, "run one criterion (1-7); default all")->check(CLI::Range(0, 7));
  app.add_option("--workers", workers, "worker threads for criteria 1-5");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<bool()>> criteria{
      [&] { return criterion1(workers); }, [&] { return criterion2(workers); },
      [&] { return criterion3(workers); }, [&] { return criterion4(workers); },
      [&] { return criterion5(workers); }, [] { return criterion6(); },
      [] { return criterion7(); }};
  bool ok = true;
  for (int i = 1; i <= 7; ++i) {
    if (only != 0 && only != i) continue;
    try {
      ok = criteria[i - 1]() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL [c" << i << "] unexpected error: " << e.what() << "\nCRITERION " << i << ": FAIL\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
