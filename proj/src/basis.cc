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

#include "interp/basis.h"

#include <set>
#include <utility>

#include "interp/errors.h"
#include "interp/matrix.h"

namespace interp {
namespace {

std::vector<Polynomial> monomials_as_polys(const Field& f, size_t num_vars, uint32_t degree) {
  std::vector<Polynomial> out;
  for (const Monomial& m : monomial_basis(num_vars, degree)) {
    out.push_back(Polynomial::term(m, FieldValue::one(f)));
  }
  return out;
}

Polynomial var(const Field& f, size_t num_vars, size_t index, uint32_t power = 1) {
  return Polynomial::term(Monomial::variable(num_vars, index, power), FieldValue::one(f));
}

}  // namespace

BasisSpec::BasisSpec(BasisKind kind, std::string name, const Field& f,
                     std::vector<Polynomial> polys)
    : kind_(kind),
      name_(std::move(name)),
      field_(f),
      num_vars_(polys.empty() ? 0 : polys.front().num_vars()),
      polys_(std::move(polys)) {
  if (polys_.empty()) throw DimensionMismatch("basis must not be empty");
  std::set<Monomial, GradedLex> support;
  for (const Polynomial& p : polys_) {
    if (p.num_vars() != num_vars_) throw DimensionMismatch("basis polynomials in different rings");
    if (p.is_zero()) throw LinearlyDependentBasis("basis contains the zero polynomial");
    if (*p.field() != field_) throw MixedFields();
    for (const auto& [m, c] : p.terms()) support.insert(m);
  }
  // Independence: the coefficient matrix must have full row rank.
  const std::vector<Monomial> cols(support.begin(), support.end());
  Matrix coeffs(field_, polys_.size(), cols.size());
  for (size_t i = 0; i < polys_.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) coeffs.at(i, j) = polys_[i].coefficient(cols[j], field_);
  }
  if (rank(coeffs) != polys_.size()) {
    throw LinearlyDependentBasis("basis '" + name_ + "' is linearly dependent");
  }
}

BasisSpec BasisSpec::full(const Field& f, size_t num_vars, uint32_t degree) {
  return BasisSpec(BasisKind::kFull, "full(" + std::to_string(degree) + ")", f,
                   monomials_as_polys(f, num_vars, degree));
}

BasisSpec BasisSpec::graph(const Field& f, uint32_t degree) {
  std::vector<Polynomial> polys;
  for (uint32_t e = degree + 1; e-- > 0;) polys.push_back(var(f, 2, 0, e));
  polys.push_back(var(f, 2, 1));
  return BasisSpec(BasisKind::kGraph, "graph(" + std::to_string(degree) + ")", f,
                   std::move(polys));
}

BasisSpec BasisSpec::circle(const Field& f) {
  std::vector<Polynomial> polys;
  polys.push_back(var(f, 2, 0, 2) + var(f, 2, 1, 2));
  polys.push_back(var(f, 2, 0));
  polys.push_back(var(f, 2, 1));
  polys.push_back(Polynomial::constant(2, FieldValue::one(f)));
  return BasisSpec(BasisKind::kCircle, "circle", f, std::move(polys));
}

BasisSpec BasisSpec::conic(const Field& f) {
  return BasisSpec(BasisKind::kConic, "conic", f, monomials_as_polys(f, 2, 2));
}

BasisSpec BasisSpec::line(const Field& f) {
  return BasisSpec(BasisKind::kLine, "line", f, {var(f, 2, 0), var(f, 2, 1),
                                                 Polynomial::constant(2, FieldValue::one(f))});
}

BasisSpec BasisSpec::quadric_surface(const Field& f, size_t dim) {
  return BasisSpec(BasisKind::kQuadricSurface, "quadric_surface(" + std::to_string(dim) + ")",
                   f, monomials_as_polys(f, dim, 2));
}

BasisSpec BasisSpec::custom(const Field& f, std::vector<Polynomial> polys) {
  return BasisSpec(BasisKind::kCustom, "custom", f, std::move(polys));
}

BasisSpec BasisSpec::from_name(std::string_view name, const Field& f,
                               std::optional<uint32_t> degree,
                               std::optional<size_t> num_vars) {
  const auto need_degree = [&]() -> uint32_t {
    if (!degree) throw ParseError("basis '" + std::string(name) + "' requires a degree");
    return *degree;
  };
  if (name == "line") return line(f);
  if (name == "circle") return circle(f);
  if (name == "conic") return conic(f);
  if (name == "cubic") return full(f, 2, 3);
  if (name == "plane") return full(f, 2, need_degree());
  if (name == "full") return full(f, num_vars.value_or(2), need_degree());
  if (name == "graph") return graph(f, need_degree());
  if (name == "quadric_surface") return quadric_surface(f, num_vars.value_or(3));
  throw ParseError("unknown basis '" + std::string(name) +
                   "' (expected line, circle, conic, cubic, plane, full, graph, "
                   "quadric_surface)");
}

BasisSpec BasisSpec::permuted(std::span<const size_t> order) const {
  if (order.size() != polys_.size()) throw DimensionMismatch("permutation has wrong length");
  std::vector<Polynomial> polys;
  for (size_t i : order) polys.push_back(polys_.at(i));
  // The constructor's rank check rejects repeated indices.
  return BasisSpec(kind_, name_, field_, std::move(polys));
}

}  // namespace interp
