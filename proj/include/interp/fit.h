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

#ifndef INTERP_FIT_H_
#define INTERP_FIT_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "interp/basis.h"
#include "interp/field.h"
#include "interp/matrix.h"
#include "interp/polynomial.h"

namespace interp {

// Affine points of a fixed dimension over one field. Repeated points are
// allowed.
class PointSet {
 public:
  PointSet(const Field& field, size_t dim) : field_(field), dim_(dim) {}

  // Throws DimensionMismatch or MixedFields.
  void add(Vector point);

  const Field& field() const { return field_; }
  size_t dim() const { return dim_; }
  size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](size_t i) const { return points_[i]; }

 private:
  Field field_;
  size_t dim_;
  std::vector<Vector> points_;
};

// Row i holds every basis element evaluated at point i.
Matrix design_matrix(const PointSet& points, const BasisSpec& basis);

// sum_j coeffs[j] * basis[j].
Polynomial combine(const BasisSpec& basis, std::span<const FieldValue> coeffs);

struct FitResult {
  size_t kernel_dim = 0;
  size_t design_rank = 0;
  // Kernel vectors of the design matrix, as coefficient vectors against the
  // basis, and the same vectors expanded into polynomials.
  KernelBasis kernel;
  std::vector<Polynomial> curves;
};

// Every member of the basis' linear system vanishing at all points.
FitResult fit_curves(const PointSet& points, const BasisSpec& basis);

using NodeValue = std::pair<FieldValue, FieldValue>;

// The unique polynomial of degree <= n-1 through n pairs, assembled as the
// sum of y_i * prod_{j != i} (x - x_j) / (x_i - x_j). Throws DuplicateNode if
// two nodes coincide and DimensionMismatch on empty input.
Polynomial lagrange_fit(std::span<const NodeValue> pairs);

// Number of general points the family is expected to pass through:
// one less than its dimension as a vector space.
size_t expected_interpolation_count(const BasisSpec& basis);

}  // namespace interp

#endif  // INTERP_FIT_H_
