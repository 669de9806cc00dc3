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
#include <vector>

#include "bentcode/bent.hpp"
#include "bentcode/codes.hpp"

namespace bentcode {

/// A published code example: a function over F_{p^m}, one or more defining-set
/// kinds that share the stated parameters, and the stated Walsh sign.
struct ReferenceExample {
  enum class Form { TraceQuadratic, HKTernary };

  std::string id;
  int p = 0;
  int m = 0;
  Form form = Form::TraceQuadratic;
  int term_index = 0;  // Tr(c x^{p^i + 1}); i = 0 is Tr(c x^2)
  int coeff_log = 0;   // c = w^coeff_log for a primitive w; 0 means c = 1
  std::string function_text;
  std::vector<SetKind> kinds;
  bool punctured = false;
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d = 0;
  std::string enumerator;
  int epsilon = 0;
};

const std::vector<ReferenceExample>& reference_examples();
/// Throws InvalidArgument for an unknown id.
const ReferenceExample& find_example(const std::string& id);

/// The example's function with w = g^w_log, g the field generator.
PAryFunction build_example_function(const ReferenceExample& ex, const FieldPtr& ctx, std::int64_t w_log);

struct ExampleOutcome {
  std::string id;
  bool pass = false;
  /// w = g^w_log for the representative that was finally reported.
  std::int64_t w_log = 1;
  int candidates_tried = 0;
  int observed_epsilon = 0;
  std::vector<CodeSummary> codes;  // one per kind, for the reported representative
  std::string detail;
};

/// Builds the codes for w = g and, if they differ from the stated values, for the
/// other primitive elements w = g^u, stopping at the first match. A constant c = 1
/// does not depend on w, so no search is made.
ExampleOutcome run_example(const ReferenceExample& ex, unsigned workers = 0);

}  // namespace bentcode
