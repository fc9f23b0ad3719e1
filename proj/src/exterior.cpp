#include "strandlab/exterior.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strandlab {

std::string ExtDegree::to_string() const {
  std::string s = a.to_string();
  s.back() = ';';
  return s + std::to_string(j) + ")";
}

int popcount(Subset I) { return __builtin_popcount(I); }

int koszul_sign(Subset I, Subset J) {
  if (I & J) return 0;
  int inversions = 0;
  for (std::size_t j = 0; j < 32; ++j)
    if (J >> j & 1u) inversions += popcount(I >> j >> 1);
  return inversions % 2 ? -1 : 1;
}

int position_sign(Subset I, std::size_t i) { return popcount(I & ((Subset{1} << i) - 1)) % 2 ? -1 : 1; }

Multidegree subset_degree(Subset I, const GradingSpec& g) {
  Multidegree d = g.zero();
  for (std::size_t i = 0; i < g.nvars(); ++i)
    if (I >> i & 1u) d += g.var_degree(i);
  return d;
}

EElement EElement::unit(const Field& f) {
  EElement e;
  e.terms_[0] = f.one();
  return e;
}

EElement EElement::generator(const Field& f, std::size_t i) {
  EElement e;
  e.terms_[Subset{1} << i] = f.one();
  return e;
}

EElement& EElement::operator+=(const EElement& o) {
  for (const auto& [s, c] : o.terms_) {
    Scalar& v = terms_[s];
    v += c;
    if (v.is_zero()) terms_.erase(s);
  }
  return *this;
}

EElement operator*(const EElement& a, const EElement& b) {
  EElement r;
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) {
      const int sg = koszul_sign(s, t);
      if (!sg) continue;
      EElement term;
      term.terms_[s | t] = sg > 0 ? c * d : -(c * d);
      r += term;
    }
  return r;
}

EElement operator*(const Scalar& c, const EElement& a) {
  EElement r;
  if (c.is_zero()) return r;
  for (const auto& [s, v] : a.terms_) r.terms_[s] = c * v;
  return r;
}

bool operator==(const EElement& a, const EElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

void EModule::set_dim(const ExtDegree& d, std::size_t n) {
  if (n)
    dims_[d] = n;
  else
    dims_.erase(d);
}

std::size_t EModule::dim(const ExtDegree& d) const {
  auto it = dims_.find(d);
  return it == dims_.end() ? 0 : it->second;
}

std::vector<ExtDegree> EModule::degrees() const {
  std::vector<ExtDegree> out;
  for (const auto& [d, n] : dims_) out.push_back(d);
  return out;
}

std::size_t EModule::total_dim() const {
  std::size_t s = 0;
  for (const auto& [d, n] : dims_) s += n;
  return s;
}

ExtDegree EModule::shift(std::size_t i, const ExtDegree& d) const {
  return {d.a - grading_.var_degree(i), d.j - 1};
}

void EModule::set_action(std::size_t i, const ExtDegree& d, const Matrix& m) { set_action(i, d, SparseMatrix(m)); }

void EModule::set_action(std::size_t i, const ExtDegree& d, SparseMatrix m) {
  if (m.rows() != dim(shift(i, d)) || m.cols() != dim(d))
    throw std::invalid_argument("action matrix has wrong shape at " + d.to_string());
  act_[{i, d}] = std::move(m);
}

Matrix EModule::action(std::size_t i, const ExtDegree& d) const { return sparse_action(i, d).dense(); }

SparseMatrix EModule::sparse_action(std::size_t i, const ExtDegree& d) const {
  auto it = act_.find({i, d});
  if (it != act_.end()) return it->second;
  return SparseMatrix(field_, dim(shift(i, d)), dim(d));
}

bool EModule::anticommutes() const {
  for (const auto& d : degrees())
    for (std::size_t i = 0; i < nvars(); ++i)
      for (std::size_t j = i; j < nvars(); ++j) {
        const SparseMatrix s = sparse_action(j, shift(i, d)) * sparse_action(i, d) +
                               sparse_action(i, shift(j, d)) * sparse_action(j, d);
        if (!s.is_zero()) return false;
      }
  return true;
}

void DifferentialEModule::set_differential(const ExtDegree& d, const Matrix& m) {
  set_differential(d, SparseMatrix(m));
}

void DifferentialEModule::set_differential(const ExtDegree& d, SparseMatrix m) {
  const ExtDegree t{d.a, d.j - 1};
  if (m.rows() != mod_.dim(t) || m.cols() != mod_.dim(d))
    throw std::invalid_argument("differential has wrong shape at " + d.to_string());
  diff_[d] = std::move(m);
}

Matrix DifferentialEModule::differential(const ExtDegree& d) const { return sparse_differential(d).dense(); }

SparseMatrix DifferentialEModule::sparse_differential(const ExtDegree& d) const {
  auto it = diff_.find(d);
  if (it != diff_.end()) return it->second;
  return SparseMatrix(mod_.field(), mod_.dim({d.a, d.j - 1}), mod_.dim(d));
}

bool DifferentialEModule::squares_to_zero() const {
  for (const auto& d : mod_.degrees())
    if (!(sparse_differential({d.a, d.j - 1}) * sparse_differential(d)).is_zero()) return false;
  return true;
}

bool DifferentialEModule::is_e_linear() const {
  for (const auto& d : mod_.degrees())
    for (std::size_t i = 0; i < mod_.nvars(); ++i) {
      const ExtDegree s = mod_.shift(i, d);
      const ExtDegree lower{d.a, d.j - 1};
      if (!(sparse_differential(s) * mod_.sparse_action(i, d) ==
            mod_.sparse_action(i, lower) * sparse_differential(d)))
        return false;
    }
  return true;
}

std::vector<Subset> omega_basis(const GradingSpec& g, const ExtDegree& d) {
  std::vector<Subset> out;
  const Subset full = (Subset{1} << g.nvars()) - 1;
  for (Subset I = 0; I <= full; ++I)
    if (popcount(I) == d.j && subset_degree(I, g) == d.a) out.push_back(I);
  return out;
}

EModule omega_E(const Field& f, const GradingSpec& g) {
  EModule m(f, g);
  std::map<ExtDegree, std::vector<Subset>> basis;
  const Subset full = (Subset{1} << g.nvars()) - 1;
  for (Subset I = 0; I <= full; ++I) basis[{subset_degree(I, g), popcount(I)}].push_back(I);
  for (const auto& [d, subs] : basis) m.set_dim(d, subs.size());
  for (const auto& [d, subs] : basis)
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      const ExtDegree s = m.shift(i, d);
      auto it = basis.find(s);
      if (it == basis.end()) continue;
      Matrix a(f, it->second.size(), subs.size());
      for (std::size_t c = 0; c < subs.size(); ++c) {
        const Subset I = subs[c];
        if (!(I >> i & 1u)) continue;
        const auto r = std::find(it->second.begin(), it->second.end(), I & ~(Subset{1} << i)) - it->second.begin();
        a(static_cast<std::size_t>(r), c) = f.from_int(position_sign(I, i));
      }
      m.set_action(i, d, std::move(a));
    }
  return m;
}

namespace {

Matrix columns_of(const Matrix& m, std::size_t from, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t k = 0; k < count; ++k) idx[k] = from + k;
  return m.columns(idx);
}

}  // namespace

Homology homology(const DifferentialEModule& dm) {
  const EModule& m = dm.module();
  const Field& f = m.field();
  Homology h;
  h.module = EModule(f, m.grading());
  const auto degs = m.degrees();

  std::map<ExtDegree, Matrix> cycles, comp;
  for (const auto& d : degs) {
    Matrix z = kernel(dm.differential(d));
    const auto extra = extend_basis(z, Matrix::identity(f, m.dim(d)));
    comp[d] = Matrix::identity(f, m.dim(d)).columns(extra);
    cycles[d] = std::move(z);
  }
  for (const auto& d : degs) {
    const ExtDegree up{d.a, d.j + 1};
    Matrix b(f, m.dim(d), 0);
    if (auto it = comp.find(up); it != comp.end()) b = dm.differential(up) * it->second;
    const Matrix& z = cycles[d];
    const Matrix hrep = z.columns(extend_basis(b, z));
    DegreeSplit s;
    s.nb = b.cols();
    s.nh = hrep.cols();
    s.nl = comp[d].cols();
    s.basis = b.hstack(hrep).hstack(comp[d]);
    if (s.basis.cols() != m.dim(d)) throw std::logic_error("homology: splitting is not a basis");
    s.coords = *solve(s.basis, Matrix::identity(f, m.dim(d)));
    h.module.set_dim(d, s.nh);
    h.split.emplace(d, std::move(s));
  }
  for (const auto& d : degs) {
    const DegreeSplit& s = h.split.at(d);
    if (!s.nh) continue;
    const Matrix reps = columns_of(s.basis, s.nb, s.nh);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      const ExtDegree t = m.shift(i, d);
      auto it = h.split.find(t);
      if (it == h.split.end() || !it->second.nh) continue;
      const Matrix c = it->second.coords * (m.action(i, d) * reps);
      std::vector<std::size_t> rows(it->second.nh);
      for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = it->second.nb + k;
      h.module.set_action(i, d, c.rows_subset(rows));
    }
  }
  return h;
}

SubEModule submodule_annihilated_by(const EModule& d, const std::vector<int>& vars) {
  Subset keep = 0;
  for (int v : vars) keep |= Subset{1} << v;
  const Field& f = d.field();
  SubEModule out;
  out.module = EModule(f, d.grading().restrict_to(vars));
  for (const auto& deg : d.degrees()) {
    Matrix stacked(f, 0, d.dim(deg));
    for (std::size_t i = 0; i < d.nvars(); ++i)
      if (!(keep >> i & 1u)) stacked = stacked.vstack(d.action(i, deg));
    Matrix k = kernel(stacked);
    out.module.set_dim(deg, k.cols());
    if (k.cols()) out.embedding[deg] = std::move(k);
  }
  for (const auto& [deg, k] : out.embedding)
    for (std::size_t t = 0; t < vars.size(); ++t) {
      const auto v = static_cast<std::size_t>(vars[t]);
      const ExtDegree s = d.shift(v, deg);
      auto it = out.embedding.find(s);
      if (it == out.embedding.end()) continue;
      auto x = solve(it->second, d.action(v, deg) * k);
      if (!x) throw std::logic_error("annihilated subspace is not stable under the action");
      out.module.set_action(t, deg, std::move(*x));
    }
  return out;
}

DifferentialEModule mapping_cone(const DifferentialEModule& x, const DifferentialEModule& y,
                                 const std::map<ExtDegree, Matrix>& f) {
  const EModule& xm = x.module();
  const EModule& ym = y.module();
  const Field& fld = ym.field();
  auto xdim = [&](const ExtDegree& d) { return xm.dim({d.a, d.j - 1}); };
  std::set<ExtDegree> degs;
  for (const auto& d : ym.degrees()) degs.insert(d);
  for (const auto& d : xm.degrees()) degs.insert({d.a, d.j + 1});

  EModule cm(fld, ym.grading());
  for (const auto& d : degs) cm.set_dim(d, xdim(d) + ym.dim(d));
  auto block = [&](const SparseMatrix& tl, const SparseMatrix& bl, const SparseMatrix& tr, const SparseMatrix& br) {
    return tl.hstack(tr).vstack(bl.hstack(br));
  };
  for (const auto& d : degs)
    for (std::size_t i = 0; i < cm.nvars(); ++i) {
      const ExtDegree s = cm.shift(i, d);
      if (!cm.dim(s)) continue;
      const ExtDegree xd{d.a, d.j - 1};
      const SparseMatrix ax = xm.sparse_action(i, xd), ay = ym.sparse_action(i, d);
      cm.set_action(i, d,
                    block(ax, SparseMatrix(fld, ay.rows(), ax.cols()), SparseMatrix(fld, ax.rows(), ay.cols()), ay));
    }
  DifferentialEModule cone(cm);
  for (const auto& d : degs) {
    const ExtDegree t{d.a, d.j - 1};
    if (!cm.dim(t)) continue;
    const ExtDegree xd{d.a, d.j - 1};
    const SparseMatrix dx = x.sparse_differential(xd);
    const SparseMatrix neg = SparseMatrix(fld, dx.rows(), dx.cols()) - dx;
    SparseMatrix fx(fld, ym.dim(t), xm.dim(xd));
    if (auto it = f.find(xd); it != f.end()) fx = SparseMatrix(it->second);
    cone.set_differential(d, block(neg, fx, SparseMatrix(fld, dx.rows(), ym.dim(d)), y.sparse_differential(d)));
  }
  return cone;
}

std::size_t homology_dim(const DifferentialEModule& d, const ExtDegree& deg) {
  const std::size_t n = d.module().dim(deg);
  if (!n) return 0;
  return n - rank(d.sparse_differential(deg)) - rank(d.sparse_differential({deg.a, deg.j + 1}));
}

}  // namespace strandlab
