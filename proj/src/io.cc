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

#include "interp/io.h"

#include <cctype>
#include <sstream>

#include "interp/errors.h"

namespace interp {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Wraps nlohmann's exceptions so callers only see ParseError.
template <typename F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

PointSet parse_points_csv(std::string_view text) {
  std::optional<Field> field;
  std::optional<PointSet> points;
  size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const std::string_view line = strip(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (field) continue;
      const std::string_view body = strip(line.substr(1));
      constexpr std::string_view kKey = "field=";
      if (body.substr(0, kKey.size()) != kKey) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header '# field=prime:<p>' or '# field=rational'");
      }
      field = Field::parse(body.substr(kKey.size()));
      continue;
    }
    if (!field) throw ParseError("points file is missing its '# field=...' header");
    Vector point;
    for (std::string_view cell : split(line, ',')) {
      try {
        point.push_back(FieldValue::parse(cell, *field));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!points) points.emplace(*field, point.size());
    if (point.size() != points->dim()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(points->dim()) + " coordinates, found " +
                       std::to_string(point.size()));
    }
    points->add(std::move(point));
  }
  if (!field) throw ParseError("points file is missing its '# field=...' header");
  if (!points) throw ParseError("points file contains no points");
  return *std::move(points);
}

std::string write_points_csv(const PointSet& points) {
  std::string out = "# field=" + points.field().to_string() + "\n";
  for (const Vector& p : points.points()) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i > 0) out += ',';
      out += p[i].to_string();
    }
    out += '\n';
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"exponents", m.exponents()}, {"coeff", c.to_string()}});
  }
  return {{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const Field& field) {
  return json_guard("polynomial", [&] {
    Polynomial p(j.at("num_vars").get<size_t>());
    for (const Json& t : j.at("terms")) {
      Monomial m(t.at("exponents").get<std::vector<uint32_t>>());
      p.add_term(m, FieldValue::parse(t.at("coeff").get<std::string>(), field));
    }
    return p;
  });
}

Json codeword_to_json(const Codeword& c) {
  Json pairs = Json::array();
  for (const auto& [x, y] : c.pairs) pairs.push_back({x.to_string(), y.to_string()});
  return {{"n", c.message_length},
          {"k", c.redundancy},
          {"p", c.modulus.value()},
          {"pairs", std::move(pairs)}};
}

Codeword codeword_from_json(const Json& j) {
  Codeword c = json_guard("codeword", [&] {
    const PrimeModulus modulus(j.at("p").get<uint64_t>());
    const Field field = Field::prime(modulus);
    Codeword out{modulus, j.at("n").get<size_t>(), j.at("k").get<size_t>(), {}};
    for (const Json& pair : j.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("codeword pair must be [x, y]");
      out.pairs.emplace_back(FieldValue::parse(pair[0].get<std::string>(), field),
                             FieldValue::parse(pair[1].get<std::string>(), field));
    }
    return out;
  });
  c.validate();
  return c;
}

Json message_to_json(const Message& m) {
  Json coeffs = Json::array();
  for (const FieldValue& v : m.coefficients) coeffs.push_back(v.to_string());
  return {{"p", m.modulus.value()}, {"message", std::move(coeffs)}};
}

Json decode_result_to_json(const DecodeResult& r) {
  Json j = {{"status", to_string(r.status)}, {"candidates", r.candidates}};
  if (r.message) j["message"] = message_to_json(*r.message)["message"];
  if (r.corrected_index) j["corrected_index"] = *r.corrected_index;
  return j;
}

Json bn_report_to_json(const BNReport& r) {
  const auto opt = [](const std::optional<int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j = {{"g", r.curve.g},
            {"r", r.curve.r},
            {"d", r.curve.d},
            {"rho", r.rho},
            {"bn_exists", r.bn_exists},
            {"bn_dim", opt(r.bn_dim)},
            {"expected_points", opt(r.expected_points)},
            {"interpolates", to_string(r.interpolates)},
            {"exception", nullptr},
            {"characteristic", r.characteristic},
            {"nb_interpolation", to_string(r.nb_interpolation)},
            {"nb_char0", to_string(r.nb_char0)},
            {"nb_char2", to_string(r.nb_char2)},
            {"char2_constraint_violated", r.char2_constraint_violated}};
  if (r.exception) {
    j["exception"] = {{"surface", r.exception->surface},
                      {"point_bound", r.exception->point_bound},
                      {"note", r.exception_note()}};
  }
  return j;
}

std::string bn_table_csv(const std::vector<BNReport>& rows) {
  std::ostringstream out;
  out << "g,r,d,rho,bn_exists,bn_dim,expected_points,interpolates,exception_note,nb_char0,"
         "nb_char2\n";
  const auto opt = [](const std::optional<int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  const auto nb = [](NormalBundleVerdict v) {
    return v == NormalBundleVerdict::kNotApplicable ? std::string() : std::string(to_string(v));
  };
  for (const BNReport& r : rows) {
    out << r.curve.g << ',' << r.curve.r << ',' << r.curve.d << ',' << r.rho << ','
        << (r.bn_exists ? "true" : "false") << ',' << opt(r.bn_dim) << ','
        << opt(r.expected_points) << ','
        << (r.interpolates == Verdict::kNotApplicable ? "" : to_string(r.interpolates)) << ','
        << csv_cell(r.exception_note()) << ',' << nb(r.nb_char0) << ',' << nb(r.nb_char2)
        << '\n';
  }
  return out.str();
}

Json suite_report_to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const TrialFailure& f : r.failures) {
    failures.push_back({{"trial", f.trial}, {"stage", f.stage}, {"kernel_dim", f.kernel_dim}});
  }
  return {{"suite", r.suite},
          {"prime", r.prime},
          {"trials", r.trials},
          {"seed", r.seed},
          {"at_count", {{"pass", r.at_count.pass}, {"fail", r.at_count.fail}}},
          {"over_count", {{"pass", r.over_count.pass}, {"fail", r.over_count.fail}}},
          {"failures", std::move(failures)}};
}

SuiteReport suite_report_from_json(const Json& j) {
  return json_guard("suite report", [&] {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.prime = j.at("prime").get<uint64_t>();
    r.trials = j.at("trials").get<size_t>();
    r.seed = j.at("seed").get<uint64_t>();
    r.at_count = {j.at("at_count").at("pass").get<size_t>(),
                  j.at("at_count").at("fail").get<size_t>()};
    r.over_count = {j.at("over_count").at("pass").get<size_t>(),
                    j.at("over_count").at("fail").get<size_t>()};
    for (const Json& f : j.at("failures")) {
      r.failures.push_back({f.at("trial").get<size_t>(), f.at("stage").get<std::string>(),
                            f.at("kernel_dim").get<size_t>()});
    }
    return r;
  });
}

Json fit_result_to_json(const FitResult& r, const BasisSpec& basis) {
  Json curves = Json::array();
  for (const Polynomial& p : r.curves) curves.push_back(polynomial_to_json(p));
  return {{"basis", basis.name()},
          {"field", basis.field().to_string()},
          {"basis_size", basis.size()},
          {"design_rank", r.design_rank},
          {"kernel_dim", r.kernel_dim},
          {"curves", std::move(curves)}};
}

}  // namespace interp
