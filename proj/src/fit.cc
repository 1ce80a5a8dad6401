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

#include "interp/fit.h"

#include <string>

#include "interp/errors.h"

namespace interp {

void PointSet::add(Vector point) {
  if (point.size() != dim_) {
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(dim_));
  }
  for (const FieldValue& v : point) {
    if (v.field() != field_) throw MixedFields();
  }
  points_.push_back(std::move(point));
}

Matrix design_matrix(const PointSet& points, const BasisSpec& basis) {
  if (basis.num_vars() != points.dim()) {
    throw DimensionMismatch("basis has " + std::to_string(basis.num_vars()) +
                            " variables but points have dimension " +
                            std::to_string(points.dim()));
  }
  if (basis.field() != points.field()) throw MixedFields();
  Matrix m(points.field(), points.size(), basis.size());
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) m.at(i, j) = evaluate(basis[j], points[i]);
  }
  return m;
}

Polynomial combine(const BasisSpec& basis, std::span<const FieldValue> coeffs) {
  if (coeffs.size() != basis.size()) throw DimensionMismatch("coefficient vector length");
  Polynomial out(basis.num_vars());
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) out += basis[j] * coeffs[j];
  }
  return out;
}

FitResult fit_curves(const PointSet& points, const BasisSpec& basis) {
  const Matrix m = design_matrix(points, basis);
  FitResult out;
  out.kernel = kernel(m);
  out.kernel_dim = out.kernel.dimension();
  out.design_rank = basis.size() - out.kernel_dim;
  for (const Vector& v : out.kernel.vectors) out.curves.push_back(combine(basis, v));
  return out;
}

Polynomial lagrange_fit(std::span<const NodeValue> pairs) {
  if (pairs.empty()) throw DimensionMismatch("interpolation needs at least one pair");
  const Field field = pairs.front().first.field();
  for (const auto& [x, y] : pairs) {
    if (x.field() != field || y.field() != field) throw MixedFields();
  }
  const size_t n = pairs.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (pairs[i].first == pairs[j].first) {
        throw DuplicateNode("node " + pairs[i].first.to_string() + " appears at positions " +
                            std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  // Dense coefficients, index = power of x.
  std::vector<FieldValue> total(n, FieldValue::zero(field));
  for (size_t i = 0; i < n; ++i) {
    std::vector<FieldValue> basis{FieldValue::one(field)};
    FieldValue denom = FieldValue::one(field);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (x - x_j)
      const FieldValue& xj = pairs[j].first;
      basis.push_back(FieldValue::zero(field));
      for (size_t k = basis.size() - 1; k > 0; --k) basis[k] = basis[k - 1] - xj * basis[k];
      basis[0] = -(xj * basis[0]);
      denom *= pairs[i].first - xj;
    }
    const FieldValue scale = pairs[i].second / denom;
    if (scale.is_zero()) continue;
    for (size_t k = 0; k < n; ++k) total[k] += scale * basis[k];
  }

  Polynomial out(1);
  for (size_t k = 0; k < n; ++k) {
    out.add_term(Monomial::variable(1, 0, static_cast<uint32_t>(k)), total[k]);
  }
  return out;
}

size_t expected_interpolation_count(const BasisSpec& basis) { return basis.size() - 1; }

}  // namespace interp
