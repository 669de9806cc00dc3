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
#include <map>
#include <string>
#include <vector>

#include "bentcode/bent.hpp"
#include "json.hpp"

namespace bentcode {

enum class SetKind { Zero, Sq, Nsq };

std::string to_string(SetKind kind);
SetKind parse_set_kind(const std::string& text);

/// Family tag and parameter record carried into code reports.
struct FunctionTag {
  std::string family;
  nlohmann::ordered_json params;
};

FunctionTag tag_of(const PAryFunction& f);
/// "0" for zero, otherwise "g<k>" with k the discrete log.
std::string element_to_string(const FieldCtx& ctx, FieldElement x);

struct DefiningSet {
  FieldPtr ctx;
  SetKind kind = SetKind::Zero;
  bool punctured = false;
  std::vector<FieldElement> elements;  // ascending index
  FunctionTag source;
};

struct CodeSummary {
  int p = 0;
  int m = 0;
  FunctionTag source;
  SetKind set_kind = SetKind::Zero;
  bool punctured = false;
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d = 0;
  std::map<std::int64_t, std::int64_t> weight_distribution;  // includes A_0 = 1
  /// True when some nonzero beta gives the zero codeword, so k < m.
  bool degenerate = false;
};

/// D_f (Zero), D_{f,sq} or D_{f,nsq}; punctured keeps one element per F_p^x orbit,
/// the one with the smallest discrete log.
DefiningSet defining_set(const PAryFunction& f, SetKind kind, bool punctured);

/// Weights of c_beta = (Tr(beta d))_{d in D} for every beta, by counting zeros.
CodeSummary build_code(const DefiningSet& set, unsigned workers = 0);

/// "1+24z^40+40z^48+60z^52"; a multiplicity of 1 is written out.
std::string weight_enumerator_string(const CodeSummary& cs);

/// #{x in F_q : pred(f(x)), Tr(beta x) = 0}, by enumeration.
std::int64_t count_oracle(const PAryFunction& f, FieldElement beta, SetKind predicate);

/// True if the prime-field residue v satisfies the set predicate.
bool matches_kind(std::uint32_t v, std::uint32_t p, SetKind kind);

nlohmann::ordered_json to_json(const CodeSummary& cs);

}  // namespace bentcode
