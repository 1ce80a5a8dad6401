// Copyright 2026 The Interp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERP_IO_H_
#define INTERP_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "interp/brill_noether.h"
#include "interp/field.h"
#include "interp/fit.h"
#include "interp/harness.h"
#include "interp/polynomial.h"
#include "interp/reed_solomon.h"

namespace interp {

using Json = nlohmann::ordered_json;

// Points CSV:
//   # field=prime:101        (or "# field=rational")
//   1,2
//   3/4,-5
// One point per row. Blank lines and further '#' lines are ignored.
// Throws ParseError.
PointSet parse_points_csv(std::string_view text);
std::string write_points_csv(const PointSet& points);

// {"num_vars": n, "terms": [{"exponents": [..], "coeff": "<scalar>"}, ...]}
// with terms in graded-lex order.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const Field& field);

// {"n": n, "k": k, "p": p, "pairs": [["x", "y"], ...]} with decimal-string
// scalars. Parsing validates the codeword.
Json codeword_to_json(const Codeword& c);
Codeword codeword_from_json(const Json& j);

Json message_to_json(const Message& m);
Json decode_result_to_json(const DecodeResult& r);

Json bn_report_to_json(const BNReport& r);
// Columns: g,r,d,rho,bn_exists,bn_dim,expected_points,interpolates,
// exception_note,nb_char0,nb_char2. Non-applicable cells are empty.
std::string bn_table_csv(const std::vector<BNReport>& rows);

Json suite_report_to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const Json& j);

Json fit_result_to_json(const FitResult& r, const BasisSpec& basis);

}  // namespace interp

#endif  // INTERP_IO_H_
