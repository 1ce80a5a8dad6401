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

#include "interp/matrix.h"

#include <string>
#include <utility>

#include "interp/errors.h"

namespace interp {

Matrix::Matrix(const Field& field, size_t rows, size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, FieldValue::zero(field)) {}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(cols));
    }
    for (size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw MixedFields();
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(const Field& field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldValue::one(field);
  return m;
}

void Matrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);

    if (!a.at(row, col).is_one()) {
      const FieldValue scale = a.at(row, col).inv();
      for (size_t c = col; c < a.cols(); ++c) a.at(row, c) *= scale;
    }
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const FieldValue factor = a.at(r, col);
      for (size_t c = col; c < a.cols(); ++c) {
        if (!a.at(row, c).is_zero()) a.at(r, c) -= factor * a.at(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

// Free-variable basis read off a reduced matrix.
std::vector<Vector> free_variable_vectors(const RrefResult& r, size_t cols) {
  const Matrix& a = r.reduced;
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : r.pivot_columns) is_pivot[p] = true;

  std::vector<Vector> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, FieldValue::zero(a.field()));
    v[f] = FieldValue::one(a.field());
    for (size_t i = 0; i < r.pivot_columns.size(); ++i) {
      v[r.pivot_columns[i]] = -a.at(i, f);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

KernelBasis kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<Vector> raw = free_variable_vectors(r, m.cols());
  if (raw.empty()) return {};

  // Row-reduce the spanning set so the basis is canonical for the subspace.
  const RrefResult canon = rref(Matrix::from_rows(m.field(), raw));
  KernelBasis out;
  out.vectors.reserve(canon.rank);
  for (size_t i = 0; i < canon.rank; ++i) {
    const auto row = canon.reduced.row(i);
    out.vectors.emplace_back(row.begin(), row.end());
  }
  return out;
}

Vector multiply(const Matrix& m, std::span<const FieldValue> v) {
  if (v.size() != m.cols()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match " + std::to_string(m.cols()) + " columns");
  }
  Vector out(m.rows(), FieldValue::zero(m.field()));
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

SolveResult solve(const Matrix& m, std::span<const FieldValue> rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("right-hand side has length " + std::to_string(rhs.size()) +
                            ", expected " + std::to_string(m.rows()));
  }
  Matrix augmented(m.field(), m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) augmented.at(r, c) = m.at(r, c);
    if (rhs[r].field() != m.field()) throw MixedFields();
    augmented.at(r, m.cols()) = rhs[r];
  }
  const RrefResult r = rref(augmented);

  SolveResult out;
  out.kernel = kernel(m);
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == m.cols()) return out;

  Vector x(m.cols(), FieldValue::zero(m.field()));
  for (size_t i = 0; i < r.rank; ++i) x[r.pivot_columns[i]] = r.reduced.at(i, m.cols());
  out.particular = std::move(x);
  return out;
}

}  // namespace interp
