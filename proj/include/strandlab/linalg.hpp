#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "strandlab/field.hpp"

namespace strandlab {

// Selects between the OpenMP kernels and the serial reference path. Both
// produce bit-identical results.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

// Dense matrix over a Field, row-major. A matrix representing a linear map
// V -> W has dim W rows and dim V columns (columns are images of basis vectors).
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows,
                             const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Scalar> column(std::size_t c) const;
  Matrix columns(std::span<const std::size_t> idx) const;
  Matrix rows_subset(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  Matrix transpose() const;

  // [A | B] and [A ; B]
  Matrix hstack(const Matrix& b) const;
  Matrix vstack(const Matrix& b) const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row i
};

// Gauss-Jordan elimination. Pivot choice is the first nonzero entry scanning
// rows top to bottom, which keeps the serial and parallel paths identical.
Echelon rref(Matrix a, Exec exec = default_exec());
Echelon rref_serial(Matrix a);
Echelon rref_parallel(Matrix a);

std::size_t rank(const Matrix& a);

// Columns form a basis of the null space, one per free column of the rref.
Matrix kernel(const Matrix& a);

// Solves a x = b; nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b);
// Solves a X = b column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Indices of columns of `extra` that extend the column span of `base` to the
// span of [base | extra], chosen greedily left to right.
std::vector<std::size_t> extend_basis(const Matrix& base, const Matrix& extra);

// Column indices forming a basis of the column space (greedy, left to right).
std::vector<std::size_t> independent_columns(const Matrix& a);

}  // namespace strandlab
