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

#ifndef INTERP_BASIS_H_
#define INTERP_BASIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interp/field.h"
#include "interp/polynomial.h"

namespace interp {

enum class BasisKind { kFull, kGraph, kCircle, kConic, kLine, kQuadricSurface, kCustom };

// An ordered, linearly independent list of polynomials spanning the linear
// system of hypersurfaces being fitted. Elements need not be monomials: the
// circle family uses x^2 + y^2.
class BasisSpec {
 public:
  // Every monomial of degree <= d in num_vars variables, graded-lex order.
  static BasisSpec full(const Field& f, size_t num_vars, uint32_t degree);
  // Graphs y = p(x), deg p <= d: {x^d, ..., x, 1, y}.
  static BasisSpec graph(const Field& f, uint32_t degree);
  // {x^2 + y^2, x, y, 1}.
  static BasisSpec circle(const Field& f);
  // {x^2, x*y, y^2, x, y, 1}.
  static BasisSpec conic(const Field& f);
  // {x, y, 1}.
  static BasisSpec line(const Field& f);
  // Quadrics in `dim` affine variables; dim = 3 gives quadric surfaces.
  static BasisSpec quadric_surface(const Field& f, size_t dim = 3);
  // Throws LinearlyDependentBasis, DimensionMismatch or MixedFields.
  static BasisSpec custom(const Field& f, std::vector<Polynomial> polys);

  // Builds a named basis: line, circle, conic, cubic, full, plane, graph,
  // quadric_surface. `degree` is required for full/plane/graph; `num_vars`
  // defaults to 2 (3 for quadric_surface). Throws ParseError.
  static BasisSpec from_name(std::string_view name, const Field& f,
                             std::optional<uint32_t> degree = std::nullopt,
                             std::optional<size_t> num_vars = std::nullopt);

  BasisKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  size_t num_vars() const { return num_vars_; }
  size_t size() const { return polys_.size(); }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const Polynomial& operator[](size_t i) const { return polys_[i]; }

  // Same elements reordered: element i of the result is element order[i].
  BasisSpec permuted(std::span<const size_t> order) const;

 private:
  BasisSpec(BasisKind kind, std::string name, const Field& f, std::vector<Polynomial> polys);

  BasisKind kind_;
  std::string name_;
  Field field_;
  size_t num_vars_;
  std::vector<Polynomial> polys_;
};

}  // namespace interp

#endif  // INTERP_BASIS_H_
