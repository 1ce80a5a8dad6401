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

#include "interp/polynomial.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "interp/errors.h"

namespace interp {

Monomial::Monomial(std::vector<uint32_t> exponents)
    : exponents_(std::move(exponents)),
      total_degree_(std::accumulate(exponents_.begin(), exponents_.end(), uint32_t{0})) {}

Monomial Monomial::one(size_t num_vars) {
  return Monomial(std::vector<uint32_t>(num_vars, 0));
}

Monomial Monomial::variable(size_t num_vars, size_t index, uint32_t power) {
  std::vector<uint32_t> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.num_vars() != num_vars()) throw DimensionMismatch("monomials in different rings");
  std::vector<uint32_t> e(exponents_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.exponents_[i];
  return Monomial(std::move(e));
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

std::string variable_name(size_t index, size_t num_vars) {
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  if (num_vars <= 4) return kNames[index];
  return "x" + std::to_string(index);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (size_t i = 0; i < m.num_vars(); ++i) {
    const uint32_t e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, m.num_vars());
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Exponent vectors of exactly `degree` in lex-descending order.
void append_degree(size_t num_vars, uint32_t degree, std::vector<uint32_t>& prefix,
                   std::vector<Monomial>& out) {
  if (prefix.size() + 1 == num_vars) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (uint32_t e = degree + 1; e-- > 0;) {
    prefix.push_back(e);
    append_degree(num_vars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(size_t num_vars, uint32_t max_degree) {
  if (num_vars == 0) throw DimensionMismatch("monomial basis needs at least one variable");
  std::vector<Monomial> out;
  std::vector<uint32_t> prefix;
  for (uint32_t d = max_degree + 1; d-- > 0;) append_degree(num_vars, d, prefix, out);
  return out;
}

Polynomial Polynomial::constant(size_t num_vars, const FieldValue& c) {
  return term(Monomial::one(num_vars), c);
}

Polynomial Polynomial::term(const Monomial& m, const FieldValue& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Graded-lex order puts the highest total degree first.
  return static_cast<int>(terms_.begin()->first.total_degree());
}

std::optional<Field> Polynomial::field() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->second.field();
}

FieldValue Polynomial::coefficient(const Monomial& m, const Field& field) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldValue::zero(field) : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldValue& c) {
  if (m.num_vars() != num_vars_) {
    throw DimensionMismatch("monomial has " + std::to_string(m.num_vars()) +
                            " variables, polynomial has " + std::to_string(num_vars_));
  }
  if (auto f = field(); f && *f != c.field()) throw MixedFields();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomials in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldValue& c) {
  if (auto f = field(); f && *f != c.field()) throw MixedFields();
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    FieldValue shown = c;
    bool negative = false;
    if (c.field().is_rational() && sgn(c.rational_value()) < 0) {
      negative = true;
      shown = -c;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_monomial = m.total_degree() == 0;
    if (unit_monomial) {
      out += shown.to_string();
    } else if (shown.is_one()) {
      out += interp::to_string(m);
    } else {
      out += shown.to_string() + "*" + interp::to_string(m);
    }
  }
  return out;
}

FieldValue evaluate(const Polynomial& p, std::span<const FieldValue> point) {
  if (point.size() != p.num_vars()) {
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " + std::to_string(p.num_vars()) +
                            " variables");
  }
  std::optional<Field> field = p.field();
  for (const FieldValue& v : point) {
    if (field && v.field() != *field) throw MixedFields();
  }
  if (!field) {
    if (point.empty()) throw DimensionMismatch("cannot infer field of an empty point");
    return FieldValue::zero(point.front().field());
  }
  FieldValue sum = FieldValue::zero(*field);
  for (const auto& [m, c] : p.terms()) {
    FieldValue t = c;
    for (size_t i = 0; i < point.size(); ++i) {
      const uint32_t e = m.exponents()[i];
      if (e == 1) {
        t *= point[i];
      } else if (e > 1) {
        t *= point[i].pow(e);
      }
    }
    sum += t;
  }
  return sum;
}

}  // namespace interp
