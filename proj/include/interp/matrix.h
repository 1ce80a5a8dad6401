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

#ifndef INTERP_MATRIX_H_
#define INTERP_MATRIX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "interp/field.h"

namespace interp {

using Vector = std::vector<FieldValue>;

// Dense row-major matrix over a single field.
class Matrix {
 public:
  // Zero matrix.
  Matrix(const Field& field, size_t rows, size_t cols);

  // Throws DimensionMismatch on ragged rows, MixedFields on foreign entries.
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows);
  static Matrix identity(const Field& field, size_t n);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldValue& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const FieldValue& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const FieldValue> row(size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  void swap_rows(size_t a, size_t b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  size_t rows_;
  size_t cols_;
  std::vector<FieldValue> entries_;
};

struct RrefResult {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivot_columns;
};

// Gauss-Jordan elimination. The pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

// Basis of the right null space, in reduced echelon form: each vector's
// leading nonzero coordinate is 1 and leading positions strictly increase.
// The basis depends only on the null space, not on the elimination path.
struct KernelBasis {
  std::vector<Vector> vectors;

  size_t dimension() const { return vectors.size(); }
};

KernelBasis kernel(const Matrix& m);

// Throws DimensionMismatch unless v.size() == m.cols().
Vector multiply(const Matrix& m, std::span<const FieldValue> v);

struct SolveResult {
  // Solution with every free variable set to zero; empty when inconsistent.
  std::optional<Vector> particular;
  KernelBasis kernel;

  bool consistent() const { return particular.has_value(); }
};

// Solves m x = rhs. Throws DimensionMismatch unless rhs.size() == m.rows().
SolveResult solve(const Matrix& m, std::span<const FieldValue> rhs);

}  // namespace interp

#endif  // INTERP_MATRIX_H_
