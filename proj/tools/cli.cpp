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

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bentcode/bent.hpp"
#include "bentcode/codes.hpp"
#include "bentcode/predict.hpp"
#include "bentcode/reference_examples.hpp"
#include "json.hpp"

namespace bentcode::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FunctionFlags {
  std::string family = "quad";
  std::optional<std::string> coeffs;
  std::string c = "1";
  int i = 3;
  std::uint64_t d = 2;
  std::uint64_t e = 1;
  std::string delta = "0";
};

struct JobSpec {
  std::uint32_t p = 3;
  int m = 2;
  FunctionFlags fn;
  std::string set = "zero";
  bool punctured = false;
  unsigned workers = 0;
  std::string json_path;
  std::string id;
  std::vector<std::uint32_t> scan_p;
  std::vector<int> scan_m;
  std::vector<std::string> scan_families;
};

/// Collects the JSON lines of one run; a failed comparison marks the run FAIL.
class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void emit(const Json& j) {
    const std::string line = j.dump();
    out_ << line << '\n';
    lines_.push_back(line);
    if (j.contains("status") && j["status"] == "FAIL") failed_ = true;
  }
  bool failed() const { return failed_; }

  void write_file(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    for (const auto& l : lines_) f << l << '\n';
  }

 private:
  std::ostream& out_;
  std::vector<std::string> lines_;
  bool failed_ = false;
};

FieldElement parse_element(const FieldCtx& ctx, const std::string& text) {
  try {
    if (text == "0") return ctx.zero();
    std::size_t used = 0;
    if (!text.empty() && text[0] == 'g') {
      const long long k = std::stoll(text.substr(1), &used);
      if (used + 1 == text.size()) return ctx.gen_pow(k);
    } else {
      const long long v = std::stoll(text, &used);
      if (used == text.size()) return ctx.from_int(v);
    }
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::InvalidArgument, "bad field element '" + text + "' (expected 0, g<k> or a decimal residue)");
}

std::vector<Term> parse_terms(const FieldCtx& ctx, const std::string& text) {
  std::vector<Term> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad term '" + item + "' (expected i:c)");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("index");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad term index in '" + item + "'");
    }
    terms.push_back({index, parse_element(ctx, item.substr(colon + 1))});
  }
  return terms;
}

PAryFunction build_function(const FieldPtr& ctx, const FunctionFlags& fn) {
  const std::string& fam = fn.family;
  if (fam == "quad") return make_quadratic(ctx, parse_terms(*ctx, fn.coeffs.value_or("0:1")));
  if (fam == "dillon")
    return make_dillon(ctx, parse_terms(*ctx, fn.coeffs.value_or("1:1")), fn.e, parse_element(*ctx, fn.delta));
  if (fam == "hk-ternary") {
    if (fn.c == "1") return make_hk_ternary_monomial(ctx);
    return make_hk_ternary_monomial(ctx, parse_element(*ctx, fn.c));
  }
  if (fam == "hk-binomial") return make_hk_binomial(ctx);
  if (fam == "cm") return make_coulter_matthews(ctx, parse_element(*ctx, fn.c), fn.i);
  if (fam == "mono") return make_monomial(ctx, parse_element(*ctx, fn.c), fn.d);
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + fam + "'");
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json job_echo(const PAryFunction& f) {
  const FunctionTag tag = tag_of(f);
  Json j;
  j["p"] = f.ctx->p();
  j["m"] = f.ctx->m();
  j["family"] = tag.family;
  j["params"] = tag.params;
  return j;
}

std::optional<int> known_sign(const PAryFunction& f) {
  try {
    return predict_sign(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownFamily) return std::nullopt;
    throw;
  }
}

Json analyze_line(const PAryFunction& f, const WalshProfile& prof, const RFCertificate& rf) {
  Json j{{"check", "analyze"}};
  j.update(job_echo(f));
  j["bent"] = prof.is_bent;
  j["weakly_regular"] = prof.is_weakly_regular;
  j["epsilon"] = prof.is_weakly_regular ? Json(prof.sign) : Json(nullptr);
  j["rf_member"] = rf.member;
  j["rf_h"] = rf.member ? Json(rf.h) : Json(nullptr);
  j["dual_digest"] = prof.is_weakly_regular ? Json(hex64(table_digest(prof.dual))) : Json(nullptr);
  const auto expected = known_sign(f);
  j["predicted_epsilon"] = expected ? Json(*expected) : Json(nullptr);
  if (expected && prof.is_weakly_regular)
    j["status"] = *expected == prof.sign ? "PASS" : "FAIL";
  else
    j["status"] = "PASS";
  return j;
}

Json code_line(const CodeSummary& cs) {
  Json j{{"check", "code"}};
  j.update(to_json(cs));
  j["enumerator"] = weight_enumerator_string(cs);
  return j;
}

Json predict_line(const PredictedDistribution& pd, const DistributionDiff& diff, SetKind kind, bool punctured) {
  Json j{{"check", "predict"}, {"set_kind", to_string(kind)}, {"punctured", punctured}};
  j["prediction"] = to_json(pd);
  j["status"] = diff.match ? "PASS" : "FAIL";
  if (!diff.match) j["detail"] = diff.detail;
  return j;
}

bool predictable(const FieldCtx& ctx, const WalshProfile& prof, const RFCertificate& rf) {
  return prof.is_weakly_regular && rf.member && ctx.m() >= 2 && !(ctx.m() % 2 == 1 && ctx.m() < 3);
}

void griesmer_line(Reporter& rep, const CodeSummary& cs) {
  if (cs.d <= 0) return;
  const GriesmerStatus st = griesmer(cs.n, cs.k, cs.d, cs.p);
  rep.emit(Json{{"check", "griesmer"}, {"n", cs.n},           {"k", cs.k},
                {"d", cs.d},           {"p", cs.p},           {"bound", st.bound_value},
                {"meets_bound", st.meets_bound}, {"next_d_excluded", st.next_d_excluded}});
}

int cmd_analyze(const JobSpec& job, Reporter& rep) {
  const PAryFunction f = build_function(build_field(job.p, job.m), job.fn);
  rep.emit(analyze_line(f, analyze(f, job.workers), rf_check(f)));
  return rep.failed() ? kExitFail : kExitPass;
}

int cmd_code(const JobSpec& job, Reporter& rep) {
  const PAryFunction f = build_function(build_field(job.p, job.m), job.fn);
  const SetKind kind = parse_set_kind(job.set);
  const DefiningSet set = defining_set(f, kind, job.punctured);
  if (set.elements.empty()) throw Error(ErrorCode::EmptySet, "defining set is empty");
  const CodeSummary cs = build_code(set, job.workers);
  rep.emit(code_line(cs));

  const WalshProfile prof = analyze(f, job.workers);
  const RFCertificate rf = rf_check(f);
  if (predictable(*f.ctx, prof, rf)) {
    const auto pd = predict_distribution(table_for(kind, job.punctured, job.m), job.p, job.m, prof.sign);
    rep.emit(predict_line(pd, compare(pd, cs), kind, job.punctured));
  } else {
    rep.emit(Json{{"check", "predict"}, {"status", "SKIPPED"}, {"reason", "not a weakly regular RF function"}});
  }
  griesmer_line(rep, cs);
  return rep.failed() ? kExitFail : kExitPass;
}

Json witness_json(const RFCertificate& rf) {
  auto arr = Json::array();
  for (const auto& w : rf.failure_witness) arr.push_back({{"h", w.h}, {"a", w.a}, {"x", w.x.index}});
  return arr;
}

int cmd_lemmas(const JobSpec& job, Reporter& rep) {
  const FieldPtr ctx = build_field(job.p, job.m);
  const PAryFunction f = build_function(ctx, job.fn);
  const RFCertificate rf = rf_check(f);
  if (!rf.member) {
    Json j{{"check", "rf"}, {"member", false}, {"zero_at_origin", rf.zero_at_origin}};
    j["witness"] = witness_json(rf);
    rep.emit(j);
    throw Error(ErrorCode::NotRFMember, "function fails the RF scaling conditions");
  }
  const WalshProfile prof = analyze(f, job.workers);
  if (!prof.is_weakly_regular) throw Error(ErrorCode::NotWeaklyRegular, "function is not weakly regular bent");
  for (const auto& r : verify_lemmas(f, prof, job.workers)) {
    Json j{{"check", "lemma"}};
    j.update(to_json(r));
    rep.emit(j);
  }
  Json q{{"check", "lemma"}};
  q.update(to_json(verify_quadratic_sum(ctx, job.workers)));
  rep.emit(q);
  return rep.failed() ? kExitFail : kExitPass;
}

Json example_line(const ReferenceExample& ex, const ExampleOutcome& o) {
  Json j{{"check", "example"}, {"id", ex.id}, {"p", ex.p}, {"m", ex.m}, {"function", ex.function_text}};
  auto kinds = Json::array();
  for (SetKind k : ex.kinds) kinds.push_back(to_string(k));
  j["kinds"] = kinds;
  j["punctured"] = ex.punctured;
  j["expected"] = {{"n", ex.n}, {"k", ex.k}, {"d", ex.d}, {"enumerator", ex.enumerator}, {"epsilon", ex.epsilon}};
  auto codes = Json::array();
  for (const auto& cs : o.codes)
    codes.push_back({{"set_kind", to_string(cs.set_kind)},
                     {"n", cs.n},
                     {"k", cs.k},
                     {"d", cs.d},
                     {"enumerator", weight_enumerator_string(cs)}});
  j["observed"] = {{"codes", codes}, {"epsilon", o.observed_epsilon}, {"w", "g" + std::to_string(o.w_log)}};
  j["candidates"] = o.candidates_tried;
  j["status"] = o.pass ? "PASS" : "FAIL";
  if (!o.pass) j["detail"] = o.detail;
  return j;
}

int cmd_verify_paper(const JobSpec& job, Reporter& rep) {
  std::vector<const ReferenceExample*> chosen;
  if (!job.id.empty()) {
    chosen.push_back(&find_example(job.id));
  } else {
    for (const auto& ex : reference_examples()) chosen.push_back(&ex);
  }
  for (const ReferenceExample* ex : chosen) rep.emit(example_line(*ex, run_example(*ex, job.workers)));
  return rep.failed() ? kExitFail : kExitPass;
}

void scan_one(std::uint32_t p, int m, const FunctionFlags& fn, unsigned workers, Reporter& rep) {
  std::optional<PAryFunction> f;
  try {
    f = build_function(build_field(p, m), fn);
  } catch (const Error& e) {
    rep.emit(Json{{"check", "scan"}, {"p", p}, {"m", m}, {"family", fn.family}, {"status", "SKIPPED"},
                  {"reason", e.what()}});
    return;
  }
  const WalshProfile prof = analyze(*f, workers);
  const RFCertificate rf = rf_check(*f);
  rep.emit(analyze_line(*f, prof, rf));
  if (!predictable(*f->ctx, prof, rf)) return;
  for (SetKind kind : {SetKind::Zero, SetKind::Sq, SetKind::Nsq}) {
    for (bool punctured : {false, true}) {
      const auto pd = predict_distribution(table_for(kind, punctured, m), p, m, prof.sign);
      const DefiningSet set = defining_set(*f, kind, punctured);
      if (set.elements.empty()) {
        rep.emit(predict_line(pd, compare_empty(pd), kind, punctured));
        continue;
      }
      const CodeSummary cs = build_code(set, workers);
      rep.emit(code_line(cs));
      rep.emit(predict_line(pd, compare(pd, cs), kind, punctured));
    }
  }
}

int cmd_scan(const JobSpec& job, Reporter& rep) {
  for (const auto& family : job.scan_families) {
    FunctionFlags fn = job.fn;
    fn.family = family;
    for (std::uint32_t p : job.scan_p)
      for (int m : job.scan_m) scan_one(p, m, fn, job.workers, rep);
  }
  return rep.failed() ? kExitFail : kExitPass;
}

void add_function_flags(CLI::App* app, JobSpec& job) {
  app->add_option("--family", job.fn.family, "quad | dillon | hk-ternary | hk-binomial | cm | mono")
      ->check(CLI::IsMember({"quad", "dillon", "hk-ternary", "hk-binomial", "cm", "mono"}));
  app->add_option("--coeffs", job.fn.coeffs, "terms i:c, c one of 0, g<k>, decimal")->expected(0, 1);
  app->add_option("--c", job.fn.c, "constant for cm and mono, alpha for hk-ternary");
  app->add_option("--i", job.fn.i, "Coulter-Matthews parameter");
  app->add_option("--d", job.fn.d, "monomial exponent");
  app->add_option("--e", job.fn.e, "Dillon divisor of p^k + 1");
  app->add_option("--delta", job.fn.delta, "Dillon subfield constant");
}

void add_common_flags(CLI::App* app, JobSpec& job) {
  app->add_option("--workers", job.workers, "worker threads, 0 = all");
  app->add_option("--json", job.json_path, "also write the report lines to this file");
}

void add_field_flags(CLI::App* app, JobSpec& job) {
  app->add_option("--p", job.p, "odd prime")->required();
  app->add_option("--m", job.m, "extension degree")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Weakly regular bent functions and their trace codes", "bentcode"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Walsh sign, weak regularity, RF membership");
  add_field_flags(analyze_cmd, job);
  add_function_flags(analyze_cmd, job);
  add_common_flags(analyze_cmd, job);

  auto* code_cmd = app.add_subcommand("code", "build C_D and compare with the closed-form tables");
  add_field_flags(code_cmd, job);
  add_function_flags(code_cmd, job);
  add_common_flags(code_cmd, job);
  code_cmd->add_option("--set", job.set, "zero | sq | nsq")->check(CLI::IsMember({"zero", "sq", "nsq"}));
  code_cmd->add_flag("--punctured", job.punctured, "one element per F_p^x orbit");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "check the counting and character-sum identities");
  add_field_flags(lemmas_cmd, job);
  add_function_flags(lemmas_cmd, job);
  add_common_flags(lemmas_cmd, job);

  auto* verify_cmd = app.add_subcommand("verify-paper", "replay the published code examples");
  verify_cmd->add_option("--id", job.id, "run a single example");
  add_common_flags(verify_cmd, job);

  auto* scan_cmd = app.add_subcommand("scan", "sweep a (p, m, family) grid");
  scan_cmd->add_option("--p", job.scan_p, "primes")->delimiter(',')->required();
  scan_cmd->add_option("--m", job.scan_m, "degrees")->delimiter(',')->required();
  scan_cmd->add_option("--family", job.scan_families, "families")
      ->delimiter(',')
      ->check(CLI::IsMember({"quad", "dillon", "hk-ternary", "hk-binomial", "cm", "mono"}));
  scan_cmd->add_option("--coeffs", job.fn.coeffs, "terms i:c")->expected(0, 1);
  scan_cmd->add_option("--c", job.fn.c, "constant");
  scan_cmd->add_option("--i", job.fn.i, "Coulter-Matthews parameter");
  scan_cmd->add_option("--d", job.fn.d, "monomial exponent");
  scan_cmd->add_option("--e", job.fn.e, "Dillon divisor");
  scan_cmd->add_option("--delta", job.fn.delta, "Dillon subfield constant");
  add_common_flags(scan_cmd, job);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalid;
  }
  if (job.scan_families.empty()) job.scan_families = {"quad"};

  Reporter rep(out);
  const auto start = std::chrono::steady_clock::now();
  int status = kExitPass;
  std::string command;
  try {
    if (analyze_cmd->parsed()) {
      command = "analyze";
      status = cmd_analyze(job, rep);
    } else if (code_cmd->parsed()) {
      command = "code";
      status = cmd_code(job, rep);
    } else if (lemmas_cmd->parsed()) {
      command = "lemmas";
      status = cmd_lemmas(job, rep);
    } else if (verify_cmd->parsed()) {
      command = "verify-paper";
      status = cmd_verify_paper(job, rep);
    } else {
      command = "scan";
      status = cmd_scan(job, rep);
    }
    rep.write_file(job.json_path);
  } catch (const Error& e) {
    err << "bentcode: " << e.what() << '\n';
    return kExitInvalid;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "bentcode: " << command << " finished in " << seconds << " s\n";
  return status;
}

}  // namespace bentcode::cli
