#include "strandlab/linalg.hpp"

#include <atomic>
#include <stdexcept>

namespace strandlab {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::columns(std::span<const std::size_t> idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

Matrix Matrix::rows_subset(std::span<const std::size_t> idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::hstack(const Matrix& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(field_, rows_, cols_ + b.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, cols_ + c) = b(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(field_, rows_ + b.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(rows_ + r, c) = b(r, c);
  return m;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sum: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("difference: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

template <bool Parallel>
Echelon rref_impl(Matrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (!a(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(pr, k));
    const Scalar inv = a(pr, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(pr, k) *= inv;

    const long long nrows = static_cast<long long>(rows);
    const std::size_t pivot_row = pr;
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (rows * (cols - c) > 4096)
      for (long long r = 0; r < nrows; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (ur == pivot_row || a(ur, c).is_zero()) continue;
        const Scalar factor = a(ur, c);
        for (std::size_t k = c; k < cols; ++k)
          if (!a(pivot_row, k).is_zero()) a(ur, k) -= factor * a(pivot_row, k);
      }
    } else {
      for (long long r = 0; r < nrows; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (ur == pivot_row || a(ur, c).is_zero()) continue;
        const Scalar factor = a(ur, c);
        for (std::size_t k = c; k < cols; ++k)
          if (!a(pivot_row, k).is_zero()) a(ur, k) -= factor * a(pivot_row, k);
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

Echelon rref_serial(Matrix a) { return rref_impl<false>(std::move(a)); }
Echelon rref_parallel(Matrix a) { return rref_impl<true>(std::move(a)); }

Echelon rref(Matrix a, Exec exec) {
  return exec == Exec::parallel ? rref_parallel(std::move(a)) : rref_serial(std::move(a));
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
  const auto e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(n, a.field().zero());
    v[f] = a.field().one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(a.field(), n, basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  const auto e = rref(a.hstack(b));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, n + c);
  }
  return x;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b) {
  Matrix bm(a.field(), b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::vector<std::size_t> extend_basis(const Matrix& base, const Matrix& extra) {
  const auto e = rref(base.hstack(extra));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

std::vector<std::size_t> independent_columns(const Matrix& a) { return rref(a).pivots; }

}  // namespace strandlab
