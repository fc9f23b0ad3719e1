#include "strandlab/sparse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace strandlab {

SparseMatrix::SparseMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(const Matrix& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) cols_[c].emplace_back(r, m(r, c));
}

SparseMatrix SparseMatrix::identity(const Field& f, std::size_t n) {
  SparseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, f.one());
  return m;
}

void SparseMatrix::set_column(std::size_t c, Column col) {
  std::stable_sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Column out;
  out.reserve(col.size());
  for (auto& [r, v] : col) {
    if (r >= rows_) throw std::out_of_range("sparse column entry out of range");
    if (!out.empty() && out.back().first == r)
      out.back().second += v;
    else
      out.emplace_back(r, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  cols_.at(c) = std::move(out);
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Column& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t x) { return e.first < x; });
  return it != col.end() && it->first == r ? it->second : field_.zero();
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

Matrix SparseMatrix::dense() const {
  Matrix m(field_, rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace_back(c, v);
  return t;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  SparseMatrix m = *this;
  m.cols_.insert(m.cols_.end(), b.cols_.begin(), b.cols_.end());
  return m;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& b) const {
  if (cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  SparseMatrix m = *this;
  m.rows_ += b.rows_;
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : b.cols_[c]) m.cols_[c].emplace_back(rows_ + r, v);
  return m;
}

std::vector<Scalar> SparseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols()) throw std::invalid_argument("apply: size mismatch");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : cols_[c]) out[r] += x * v[c];
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows_) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix m(a.field_, a.rows_, b.cols());
  std::vector<Scalar> acc(a.rows_, a.field_.zero());
  std::vector<char> seen(a.rows_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    touched.clear();
    for (const auto& [k, v] : b.cols_[c])
      for (const auto& [r, w] : a.cols_[k]) {
        acc[r] += w * v;
        if (!seen[r]) {
          seen[r] = 1;
          touched.push_back(r);
        }
      }
    std::sort(touched.begin(), touched.end());
    auto& out = m.cols_[c];
    for (std::size_t r : touched) {
      if (!acc[r].is_zero()) out.emplace_back(r, acc[r]);
      acc[r] = a.field_.zero();
      seen[r] = 0;
    }
  }
  return m;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sparse sum: shape mismatch");
  SparseMatrix m(a.field(), a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseMatrix::Column col = a.column(c);
    for (const auto& [r, v] : b.column(c)) col.emplace_back(r, subtract ? -v : v);
    m.set_column(c, std::move(col));
  }
  return m;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

namespace {

struct PrimeOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T from(const Scalar& s) const { return s.residue(); }
  bool is_zero(T x) const { return x == 0; }
  T mul(T x, T y) const { return x * y % p; }
  T sub(T x, T y) const { return (x - y + p) % p; }
  T inv(T x) const {
    T r = 1, b = x, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  }
};

struct ScalarOps {
  Field f;
  using T = Scalar;
  T zero() const { return f.zero(); }
  T from(const Scalar& s) const { return s; }
  bool is_zero(const T& x) const { return x.is_zero(); }
  T mul(const T& x, const T& y) const { return x * y; }
  T sub(const T& x, const T& y) const { return x - y; }
  T inv(const T& x) const { return x.inverse(); }
};

template <class Ops>
std::size_t eliminate(const SparseMatrix& a, const Ops& ops) {
  using T = typename Ops::T;
  const std::size_t n = a.rows();
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a.column(x).size() < a.column(y).size(); });

  // piv[i] holds the pivot with leading row i, lead coefficient 1 first.
  std::vector<std::vector<std::pair<std::size_t, T>>> piv(n);
  std::vector<T> acc(n, ops.zero());
  std::vector<char> queued(n, 0);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
  std::size_t rank = 0;
  for (std::size_t c : order) {
    for (const auto& [r, v] : a.column(c)) {
      acc[r] = ops.from(v);
      queued[r] = 1;
      heap.push(r);
    }
    while (!heap.empty()) {
      const std::size_t i = heap.top();
      heap.pop();
      queued[i] = 0;
      if (ops.is_zero(acc[i])) continue;
      const T v = acc[i];
      acc[i] = ops.zero();
      if (piv[i].empty()) {
        const T inv = ops.inv(v);
        auto& p = piv[i];
        p.emplace_back(i, ops.mul(v, inv));
        while (!heap.empty()) {
          const std::size_t j = heap.top();
          heap.pop();
          queued[j] = 0;
          if (!ops.is_zero(acc[j])) p.emplace_back(j, ops.mul(acc[j], inv));
          acc[j] = ops.zero();
        }
        ++rank;
        break;
      }
      const auto& p = piv[i];
      for (std::size_t k = 1; k < p.size(); ++k) {
        const std::size_t j = p[k].first;
        acc[j] = ops.sub(acc[j], ops.mul(v, p[k].second));
        if (!queued[j]) {
          queued[j] = 1;
          heap.push(j);
        }
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& a) {
  if (a.field().is_prime()) return eliminate(a, PrimeOps{a.field().characteristic()});
  return eliminate(a, ScalarOps{a.field()});
}

}  // namespace strandlab
