#pragma once

#include <map>
#include <string>
#include <vector>

#include "strandlab/polynomial.hpp"

namespace strandlab {

// Free module given by the degrees of its generators: S(-a_1) + ... + S(-a_m).
struct GradedFreeModule {
  std::vector<Multidegree> gen_degrees;
  std::size_t rank() const { return gen_degrees.size(); }
};

// Homogeneous map of free modules. Entry (i,j) is zero or homogeneous of
// degree col_degrees[j] - row_degrees[i].
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(const Ring* ring, std::vector<Multidegree> row_degrees, std::vector<Multidegree> col_degrees);

  const Ring* ring() const { return ring_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }
  const std::vector<Multidegree>& row_degrees() const { return rows_; }
  const std::vector<Multidegree>& col_degrees() const { return cols_; }

  // The mutable overload inserts a zero entry when none is stored.
  Polynomial& at(std::size_t r, std::size_t c) { return data_[r].try_emplace(c, ring_).first->second; }
  const Polynomial& at(std::size_t r, std::size_t c) const;
  // Stored entries of row r keyed by column; some may be zero.
  const std::map<std::size_t, Polynomial>& row(std::size_t r) const { return data_[r]; }

  std::vector<Polynomial> column(std::size_t c) const;

  // Throws std::invalid_argument naming the first offending entry.
  void check_homogeneous() const;
  bool is_zero() const;

  GradedMatrix transpose_dual() const;  // transpose with negated degrees

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  const Ring* ring_ = nullptr;
  std::vector<Multidegree> rows_, cols_;
  std::vector<std::map<std::size_t, Polynomial>> data_;  // sparse rows
  Polynomial zero_;
};

// Bounded complex of graded free modules F_0 <- F_1 <- ... <- F_L.
class GradedComplex {
 public:
  GradedComplex() = default;
  explicit GradedComplex(const Ring* ring) : ring_(ring) {}

  const Ring* ring() const { return ring_; }

  // Number of stored terms; term(i) for i >= size() is zero.
  std::size_t size() const { return terms_.size(); }
  const GradedFreeModule& term(std::size_t i) const;
  // d_i : F_i -> F_{i-1}, for 1 <= i < size().
  const GradedMatrix& differential(std::size_t i) const { return diffs_.at(i); }
  GradedMatrix& differential(std::size_t i) { return diffs_.at(i); }

  void push_term(GradedFreeModule f);                   // appends F_0
  void push_term(GradedFreeModule f, GradedMatrix d);   // appends F_i with d_i

  // Drops trailing zero terms.
  void trim();
  // Keeps homological degrees 0..length.
  GradedComplex truncated(std::size_t length) const;

  bool is_zero() const;

  friend bool operator==(const GradedComplex& a, const GradedComplex& b);

 private:
  const Ring* ring_ = nullptr;
  std::vector<GradedFreeModule> terms_;
  std::vector<GradedMatrix> diffs_;  // diffs_[0] is an empty placeholder
};

// (homological degree, multidegree) -> rank.
class BettiTable {
 public:
  void add(std::size_t i, const Multidegree& a, std::size_t count = 1);
  std::size_t at(std::size_t i, const Multidegree& a) const;
  const std::map<std::pair<std::size_t, Multidegree>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // One line per entry, "i<TAB>(a_1,...,a_r)<TAB>rank", sorted by
  // (i, theta(a), lex(a)).
  std::string to_text(const GradingSpec& spec) const;
  // Grid with columns i and rows theta(a) - i, '.' for zero.
  std::string to_grid(const GradingSpec& spec) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<std::size_t, Multidegree>, std::size_t> entries_;
};

BettiTable betti_table(const GradedComplex& c);

// d_{i-1} d_i == 0 for all i, checked exactly.
bool is_complex(const GradedComplex& c);

// Every differential entry is a k-linear combination of variables.
bool is_strongly_linear(const GradedComplex& c);

// No differential entry has a nonzero constant term.
bool is_minimal(const GradedComplex& c);

// Iterated Gaussian cancellation of unit entries, lowest homological degree
// first and row-major within a matrix. The result is homotopy equivalent.
GradedComplex minimize(const GradedComplex& c);

// Record of which generators survive minimize(), per homological degree.
struct MinimizeResult {
  GradedComplex complex;
  std::vector<std::vector<std::size_t>> kept;  // original generator indices
};
MinimizeResult minimize_tracked(const GradedComplex& c);

}  // namespace strandlab
