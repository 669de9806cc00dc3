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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bentcode/bent.hpp"
#include "bentcode/codes.hpp"
#include "json.hpp"

namespace bentcode {

/// Closed-form weight-distribution tables.
///   T1 / C1             D_f and its puncturing, even m
///   T2 / C2             D_f and its puncturing, odd m
///   T_evensq / C_even   D_{f,sq} and D_{f,nsq} (identical), even m
///   T_oddnsq, T_oddsq   odd m, and their puncturings C_oddnsq, C_oddsq
enum class TableId { T1, T2, C1, C2, T_evensq, T_oddnsq, T_oddsq, C_even, C_oddnsq, C_oddsq };

std::string to_string(TableId id);
/// The table that describes C_D for a set of the given kind.
TableId table_for(SetKind kind, bool punctured, int m);

struct PredictedDistribution {
  TableId table_id = TableId::T1;
  int p = 0;
  int m = 0;
  int epsilon = 1;
  std::int64_t n = 0;
  int k = 0;
  /// (weight, number of nonzero beta) in table order. A weight-0 row means the
  /// code is degenerate; k is reduced to match and compare() divides the rest.
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
};

PredictedDistribution predict_distribution(TableId id, int p, int m, int epsilon);

struct DistributionDiff {
  bool match = false;
  std::string detail;
};

/// Exact comparison of n, k and every nonzero weight (zero-multiplicity rows are ignored).
/// A predicted length of 0 matches an empty defining set.
DistributionDiff compare(const PredictedDistribution& pred, const CodeSummary& observed);
DistributionDiff compare_empty(const PredictedDistribution& pred);

/// The Walsh sign each catalog family is known to have.
/// Quadratic functions are covered only as a single monomial Tr(c x^2).
int predict_sign(const PAryFunction& f);

struct LemmaReport {
  std::string lemma_id;
  int p = 0;
  int m = 0;
  int epsilon = 0;
  std::string regime;
  std::variant<std::int64_t, CycInt> predicted;
  std::variant<std::int64_t, CycInt> observed;
  bool match = false;
  std::int64_t cases = 0;
};

/// Checks the preimage-count and character-sum identities for a weakly regular
/// f in RF against brute-force evaluation, one report per (identity, regime).
std::vector<LemmaReport> verify_lemmas(const PAryFunction& f, unsigned workers = 0);
std::vector<LemmaReport> verify_lemmas(const PAryFunction& f, const WalshProfile& profile, unsigned workers = 0);

/// Sum_x zeta^{Tr(a x^2)} = (-1)^{m-1} eta(a) sqrt(p*)^m for every nonzero a.
LemmaReport verify_quadratic_sum(const FieldPtr& ctx, unsigned workers = 0);

struct GriesmerStatus {
  bool meets_bound = false;
  bool next_d_excluded = false;
  std::int64_t bound_value = 0;
};

/// g_p(k, d) = Sum_{i<k} ceil(d / p^i).
std::int64_t griesmer_bound(std::int64_t k, std::int64_t d, std::int64_t p);
GriesmerStatus griesmer(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t p);

nlohmann::ordered_json to_json(const PredictedDistribution& pd);
nlohmann::ordered_json to_json(const LemmaReport& r);

}  // namespace bentcode
