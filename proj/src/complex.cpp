#include "strandlab/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strandlab {

GradedMatrix::GradedMatrix(const Ring* ring, std::vector<Multidegree> row_degrees,
                           std::vector<Multidegree> col_degrees)
    : ring_(ring), rows_(std::move(row_degrees)), cols_(std::move(col_degrees)),
      data_(rows_.size()), zero_(ring) {}

const Polynomial& GradedMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? zero_ : it->second;
}

std::vector<Polynomial> GradedMatrix::column(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.push_back(at(r, c));
  return v;
}

void GradedMatrix::check_homogeneous() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, p] : data_[r]) {
      if (p.is_zero()) continue;
      auto d = p.degree();
      if (!d || *d != cols_[c] - rows_[r])
        throw std::invalid_argument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") = " + p.to_string() + " is not homogeneous of degree " +
                                    (cols_[c] - rows_[r]).to_string());
    }
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : data_)
    for (const auto& [c, p] : row)
      if (!p.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::transpose_dual() const {
  std::vector<Multidegree> r, c;
  for (const auto& d : cols_) r.push_back(-d);
  for (const auto& d : rows_) c.push_back(-d);
  GradedMatrix t(ring_, r, c);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, p] : data_[i])
      if (!p.is_zero()) t.at(j, i) = p;
  return t;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("graded matrix product: shape mismatch");
  GradedMatrix m(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, p] : a.data_[r]) {
      if (p.is_zero()) continue;
      for (const auto& [c, q] : b.data_[k])
        if (!q.is_zero()) m.at(r, c) += p * q;
    }
    std::erase_if(m.data_[r], [](const auto& e) { return e.second.is_zero(); });
  }
  return m;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, p] : a.data_[r])
      if (!(p == b.at(r, c))) return false;
    for (const auto& [c, q] : b.data_[r])
      if (!q.is_zero() && a.data_[r].find(c) == a.data_[r].end()) return false;
  }
  return true;
}

const GradedFreeModule& GradedComplex::term(std::size_t i) const {
  static const GradedFreeModule empty;
  return i < terms_.size() ? terms_[i] : empty;
}

void GradedComplex::push_term(GradedFreeModule f) {
  if (!terms_.empty()) throw std::logic_error("push_term without differential after F_0");
  terms_.push_back(std::move(f));
  diffs_.emplace_back();
}

void GradedComplex::push_term(GradedFreeModule f, GradedMatrix d) {
  if (terms_.empty()) throw std::logic_error("F_0 must be pushed first");
  if (d.rows() != terms_.back().rank() || d.cols() != f.rank())
    throw std::invalid_argument("differential shape does not match terms");
  terms_.push_back(std::move(f));
  diffs_.push_back(std::move(d));
}

void GradedComplex::trim() {
  while (terms_.size() > 1 && terms_.back().rank() == 0) {
    terms_.pop_back();
    diffs_.pop_back();
  }
}

GradedComplex GradedComplex::truncated(std::size_t length) const {
  GradedComplex c = *this;
  if (c.terms_.size() > length + 1) {
    c.terms_.resize(length + 1);
    c.diffs_.resize(length + 1);
  }
  return c;
}

bool GradedComplex::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const GradedFreeModule& f) { return f.rank() == 0; });
}

bool operator==(const GradedComplex& a, const GradedComplex& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].gen_degrees != b.terms_[i].gen_degrees) return false;
  for (std::size_t i = 1; i < a.diffs_.size(); ++i)
    if (!(a.diffs_[i] == b.diffs_[i])) return false;
  return true;
}

void BettiTable::add(std::size_t i, const Multidegree& a, std::size_t count) {
  if (count) entries_[{i, a}] += count;
}

std::size_t BettiTable::at(std::size_t i, const Multidegree& a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

std::string BettiTable::to_text(const GradingSpec& spec) const {
  std::vector<std::pair<std::pair<std::size_t, Multidegree>, std::size_t>> v(entries_.begin(), entries_.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) return x.first.first < y.first.first;
    const long tx = spec.theta_of(x.first.second), ty = spec.theta_of(y.first.second);
    if (tx != ty) return tx < ty;
    return x.first.second < y.first.second;
  });
  std::ostringstream os;
  for (const auto& [key, rank] : v) os << key.first << '\t' << key.second.to_string() << '\t' << rank << '\n';
  return os.str();
}

std::string BettiTable::to_grid(const GradingSpec& spec) const {
  if (entries_.empty()) return "";
  std::map<std::pair<long, std::size_t>, std::size_t> grid;
  long rmin = 0, rmax = 0;
  std::size_t imax = 0;
  bool first = true;
  for (const auto& [key, rank] : entries_) {
    const long row = spec.theta_of(key.second) - static_cast<long>(key.first);
    grid[{row, key.first}] += rank;
    if (first || row < rmin) rmin = row;
    if (first || row > rmax) rmax = row;
    imax = std::max(imax, key.first);
    first = false;
  }
  std::size_t width = 1;
  for (const auto& [k, v] : grid) width = std::max(width, std::to_string(v).size());
  for (std::size_t i = 0; i <= imax; ++i) width = std::max(width, std::to_string(i).size());
  std::size_t label = 0;
  for (long r = rmin; r <= rmax; ++r) label = std::max(label, std::to_string(r).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::ostringstream os;
  os << std::string(label, ' ');
  for (std::size_t i = 0; i <= imax; ++i) os << ' ' << pad(std::to_string(i), width);
  os << '\n';
  for (long r = rmin; r <= rmax; ++r) {
    os << pad(std::to_string(r) + ":", label);
    for (std::size_t i = 0; i <= imax; ++i) {
      auto it = grid.find({r, i});
      os << ' ' << pad(it == grid.end() ? "." : std::to_string(it->second), width);
    }
    os << '\n';
  }
  return os.str();
}

BettiTable betti_table(const GradedComplex& c) {
  BettiTable t;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& d : c.term(i).gen_degrees) t.add(i, d);
  return t;
}

bool is_complex(const GradedComplex& c) {
  for (std::size_t i = 2; i < c.size(); ++i)
    if (!(c.differential(i - 1) * c.differential(i)).is_zero()) return false;
  return true;
}

bool is_strongly_linear(const GradedComplex& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto& d = c.differential(i);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [k, p] : d.row(r))
        if (!is_linear_form(p)) return false;
  }
  return true;
}

bool is_minimal(const GradedComplex& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto& d = c.differential(i);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [k, p] : d.row(r))
        if (!p.constant_term().is_zero()) return false;
  }
  return true;
}

namespace {

using PolyGrid = std::vector<std::vector<Polynomial>>;  // [row][col]

PolyGrid to_grid(const GradedMatrix& m) {
  PolyGrid g(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(m.ring())));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, p] : m.row(r)) g[r][c] = p;
  return g;
}

}  // namespace

MinimizeResult minimize_tracked(const GradedComplex& input) {
  const Ring* ring = input.ring();
  const std::size_t len = input.size();
  std::vector<std::vector<Multidegree>> degs(len);
  std::vector<std::vector<std::size_t>> kept(len);
  std::vector<PolyGrid> d(len);
  for (std::size_t i = 0; i < len; ++i) {
    degs[i] = input.term(i).gen_degrees;
    kept[i].resize(degs[i].size());
    for (std::size_t k = 0; k < degs[i].size(); ++k) kept[i][k] = k;
    if (i > 0) d[i] = to_grid(input.differential(i));
  }

  auto erase_row = [](PolyGrid& g, std::size_t r) { g.erase(g.begin() + static_cast<long>(r)); };
  auto erase_col = [](PolyGrid& g, std::size_t c) {
    for (auto& row : g) row.erase(row.begin() + static_cast<long>(c));
  };

  for (std::size_t i = 1; i < len; ++i) {
    while (true) {
      auto& m = d[i];
      std::size_t pr = 0, pc = 0;
      bool found = false;
      for (std::size_t r = 0; r < m.size() && !found; ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
          if (!m[r][c].is_zero() && !m[r][c].constant_term().is_zero()) {
            pr = r;
            pc = c;
            found = true;
            break;
          }
      if (!found) break;
      const Scalar inv = m[pr][pc].constant_term().inverse();
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == pr || m[r][pc].is_zero()) continue;
        const Polynomial factor = inv * m[r][pc];
        for (std::size_t c = 0; c < m[r].size(); ++c) {
          if (c == pc || m[pr][c].is_zero()) continue;
          m[r][c] -= factor * m[pr][c];
        }
      }
      erase_row(m, pr);
      erase_col(m, pc);
      if (i + 1 < len) erase_row(d[i + 1], pc);
      if (i >= 2) erase_col(d[i - 1], pr);
      degs[i].erase(degs[i].begin() + static_cast<long>(pc));
      kept[i].erase(kept[i].begin() + static_cast<long>(pc));
      degs[i - 1].erase(degs[i - 1].begin() + static_cast<long>(pr));
      kept[i - 1].erase(kept[i - 1].begin() + static_cast<long>(pr));
    }
  }

  GradedComplex out(ring);
  for (std::size_t i = 0; i < len; ++i) {
    GradedFreeModule f{degs[i]};
    if (i == 0) {
      out.push_term(f);
      continue;
    }
    GradedMatrix gm(ring, degs[i - 1], degs[i]);
    for (std::size_t r = 0; r < degs[i - 1].size(); ++r)
      for (std::size_t c = 0; c < degs[i].size(); ++c)
        if (!d[i][r][c].is_zero()) gm.at(r, c) = d[i][r][c];
    out.push_term(f, std::move(gm));
  }
  out.trim();
  kept.resize(out.size());
  return {std::move(out), std::move(kept)};
}

GradedComplex minimize(const GradedComplex& c) { return minimize_tracked(c).complex; }

}  // namespace strandlab
