#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "strandlab/linalg.hpp"

namespace strandlab {

// Sparse matrix over a Field stored by columns. Each column is sorted by row
// index and holds no zero entries. Same orientation as Matrix: columns are
// images of basis vectors.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Scalar>>;

  SparseMatrix() = default;
  SparseMatrix(const Field& f, std::size_t rows, std::size_t cols);
  explicit SparseMatrix(const Matrix& m);

  static SparseMatrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Field& field() const { return field_; }

  const Column& column(std::size_t c) const { return cols_[c]; }
  // Entries may come unsorted and repeated; repeats are summed, zeros dropped.
  void set_column(std::size_t c, Column col);
  Scalar at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;

  bool is_zero() const;
  Matrix dense() const;
  SparseMatrix transpose() const;

  // [A | B] and [A ; B]
  SparseMatrix hstack(const SparseMatrix& b) const;
  SparseMatrix vstack(const SparseMatrix& b) const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

// Rank by sparse elimination: columns are reduced against stored pivots keyed
// by their leading row, sparsest columns first. Prime fields use machine
// integers throughout.
std::size_t rank(const SparseMatrix& a);

}  // namespace strandlab
