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

#ifndef INTERP_POLYNOMIAL_H_
#define INTERP_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interp/field.h"

namespace interp {

class Monomial {
 public:
  explicit Monomial(std::vector<uint32_t> exponents);
  static Monomial one(size_t num_vars);
  // x_index^power in num_vars variables.
  static Monomial variable(size_t num_vars, size_t index, uint32_t power = 1);

  const std::vector<uint32_t>& exponents() const { return exponents_; }
  size_t num_vars() const { return exponents_.size(); }
  uint32_t total_degree() const { return total_degree_; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<uint32_t> exponents_;
  uint32_t total_degree_;
};

// Graded lexicographic order: higher total degree first, ties broken by the
// larger exponent of the earliest variable. In (x, y) this lists
// x^2, x*y, y^2, x, y, 1.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// x, y, z, w for up to four variables, x0..x{n-1} beyond that.
std::string variable_name(size_t index, size_t num_vars);

std::string to_string(const Monomial& m);

// All monomials of total degree <= max_degree, in graded-lex order.
// There are C(num_vars + max_degree, max_degree) of them.
std::vector<Monomial> monomial_basis(size_t num_vars, uint32_t max_degree);

// Sparse multivariate polynomial. Zero coefficients are never stored, and
// every coefficient lives in the same field.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldValue, GradedLex>;

  explicit Polynomial(size_t num_vars) : num_vars_(num_vars) {}
  static Polynomial constant(size_t num_vars, const FieldValue& c);
  static Polynomial term(const Monomial& m, const FieldValue& c);

  size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Field of the coefficients; empty for the zero polynomial.
  std::optional<Field> field() const;

  // Coefficient of m, or zero in `field` if absent.
  FieldValue coefficient(const Monomial& m, const Field& field) const;

  // Adds c * m. Throws DimensionMismatch or MixedFields.
  void add_term(const Monomial& m, const FieldValue& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const FieldValue& c);
  Polynomial operator*(const Polynomial& o) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const FieldValue& c) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Human-readable, graded-lex order, e.g. "x^2 + 3*x*y - 1/2".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  size_t num_vars_;
  TermMap terms_;
};

// Throws DimensionMismatch unless point.size() == p.num_vars().
FieldValue evaluate(const Polynomial& p, std::span<const FieldValue> point);

}  // namespace interp

#endif  // INTERP_POLYNOMIAL_H_
