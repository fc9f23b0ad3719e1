#include "strandlab/bgg.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

#include "strandlab/resolution.hpp"

namespace strandlab {

namespace {

int parity_sign(long j) { return j % 2 == 0 ? 1 : -1; }

Scalar signed_value(const Field&, int sign, const Scalar& v) { return sign > 0 ? v : -v; }

bool theta_then_lex(const GradingSpec& g, const Multidegree& a, const Multidegree& b) {
  const long ta = g.theta_of(a), tb = g.theta_of(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

}  // namespace

std::vector<Multidegree> ModuleView::generator_degrees(int j) const {
  return j == 0 ? m_.generator_degrees() : std::vector<Multidegree>{};
}

std::size_t ModuleView::dim(int j, const Multidegree& c) const { return j == 0 ? m_.dim(c) : 0; }

Matrix ModuleView::mult(int j, std::size_t i, const Multidegree& c) const {
  if (j != 0) return Matrix(field(), 0, 0);
  return m_.multiplication_map(i, c);
}

Matrix ModuleView::diff(int j, const Multidegree& c) const { return Matrix(field(), dim(j - 1, c), dim(j, c)); }

RestrictedView::RestrictedView(const ComplexView& base, std::vector<int> vars)
    : base_(base), vars_(std::move(vars)), grading_(base.grading().restrict_to(vars_)) {
  if (vars_.empty()) throw std::invalid_argument("restriction of scalars needs at least one variable");
  if (!std::is_sorted(vars_.begin(), vars_.end())) throw std::invalid_argument("variables must be increasing");
}

Matrix RestrictedView::mult(int j, std::size_t i, const Multidegree& c) const {
  return base_.mult(j, static_cast<std::size_t>(vars_.at(i)), c);
}

RestrictedView restrict_scalars(const ComplexView& m, const std::vector<int>& vars) { return RestrictedView(m, vars); }

std::vector<Multidegree> FreeComplexView::generator_degrees(int j) const {
  if (j < 0 || j >= static_cast<int>(f_.size())) return {};
  return f_.term(static_cast<std::size_t>(j)).gen_degrees;
}

const FreeComplexView::Piece& FreeComplexView::piece(int j, const Multidegree& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::pair{j, c};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Piece p;
  if (j >= 0 && j < static_cast<int>(f_.size())) {
    const auto& gens = f_.term(static_cast<std::size_t>(j)).gen_degrees;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& u : monomials_of_degree(c - gens[g], grading())) {
        p.index[{u, g}] = p.basis.size();
        p.basis.emplace_back(u, g);
      }
  }
  return cache_.emplace(key, std::move(p)).first->second;
}

const std::vector<std::pair<Monomial, std::size_t>>& FreeComplexView::basis(int j, const Multidegree& c) const {
  return piece(j, c).basis;
}

std::size_t FreeComplexView::index(int j, const Multidegree& c, const Monomial& u, std::size_t g) const {
  return piece(j, c).index.at({u, g});
}

Matrix FreeComplexView::mult(int j, std::size_t i, const Multidegree& c) const {
  const Multidegree t = c + grading().var_degree(i);
  const auto& src = basis(j, c);
  Matrix m(field(), dim(j, t), src.size());
  const Monomial x = Monomial::variable(static_cast<int>(i));
  for (std::size_t k = 0; k < src.size(); ++k) m(index(j, t, x * src[k].first, src[k].second), k) = field().one();
  return m;
}

Matrix FreeComplexView::diff(int j, const Multidegree& c) const {
  const auto& src = basis(j, c);
  Matrix m(field(), dim(j - 1, c), src.size());
  if (j < 1) return m;
  const GradedMatrix& d = f_.differential(static_cast<std::size_t>(j));
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto& [u, g] = src[k];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& t : d.at(r, g).terms()) m(index(j - 1, c, u * t.mono, r), k) += t.coeff;
  }
  return m;
}

std::size_t RModule::position(const ExtDegree& d, int j, Subset I, std::size_t index) const {
  const auto& v = labels.at(d);
  auto it = std::lower_bound(v.begin(), v.end(), std::tuple{j, I, index}, [](const RLabel& l, const auto& key) {
    return std::tuple{l.j, l.I, l.index} < key;
  });
  if (it == v.end() || it->j != j || it->I != I || it->index != index)
    throw std::out_of_range("R(C): no basis vector at " + d.to_string());
  return static_cast<std::size_t>(it - v.begin());
}

RModule functor_R(const ComplexView& cv, long theta_cap) {
  const GradingSpec& g = cv.grading();
  const Field& f = cv.field();
  const std::size_t n = g.nvars();
  const Subset full = (Subset{1} << n) - 1;
  RModule r;
  r.theta_cap = theta_cap;

  for (int j = cv.lo(); j <= cv.hi(); ++j) {
    std::set<Multidegree> cs;
    for (const auto& gen : cv.generator_degrees(j))
      for (const auto& c : degrees_above(gen, theta_cap, g)) cs.insert(c);
    for (const auto& c : cs) {
      const std::size_t dim = cv.dim(j, c);
      if (!dim) continue;
      for (Subset I = 0; I <= full; ++I) {
        const Multidegree b = c + subset_degree(I, g);
        if (g.theta_of(b) > theta_cap) continue;
        auto& v = r.labels[{b, j + popcount(I)}];
        for (std::size_t k = 0; k < dim; ++k) v.push_back(RLabel{j, I, k, c});
      }
    }
  }
  for (auto& [d, v] : r.labels)
    std::sort(v.begin(), v.end(),
              [](const RLabel& x, const RLabel& y) { return std::tuple{x.j, x.I, x.index} < std::tuple{y.j, y.I, y.index}; });

  EModule m(f, g);
  for (const auto& [d, v] : r.labels) m.set_dim(d, v.size());
  for (const auto& [d, v] : r.labels)
    for (std::size_t i = 0; i < n; ++i) {
      const ExtDegree s = m.shift(i, d);
      if (!m.dim(s)) continue;
      SparseMatrix a(f, m.dim(s), v.size());
      for (std::size_t p = 0; p < v.size(); ++p) {
        const RLabel& l = v[p];
        if (!(l.I >> i & 1u)) continue;
        a.set_column(p, {{r.position(s, l.j, l.I & ~(Subset{1} << i), l.index), f.from_int(position_sign(l.I, i))}});
      }
      m.set_action(i, d, std::move(a));
    }

  std::map<std::tuple<int, std::size_t, Multidegree>, Matrix> mult_cache;
  std::map<std::pair<int, Multidegree>, Matrix> diff_cache;
  auto mult = [&](int j, std::size_t i, const Multidegree& c) -> const Matrix& {
    auto key = std::tuple{j, i, c};
    auto it = mult_cache.find(key);
    if (it == mult_cache.end()) it = mult_cache.emplace(key, cv.mult(j, i, c)).first;
    return it->second;
  };
  auto diff = [&](int j, const Multidegree& c) -> const Matrix& {
    auto key = std::pair{j, c};
    auto it = diff_cache.find(key);
    if (it == diff_cache.end()) it = diff_cache.emplace(key, cv.diff(j, c)).first;
    return it->second;
  };

  DifferentialEModule dm(std::move(m));
  for (const auto& [d, v] : r.labels) {
    const ExtDegree t{d.a, d.j - 1};
    const std::size_t rows = dm.module().dim(t);
    if (!rows) continue;
    SparseMatrix dd(f, rows, v.size());
    for (std::size_t p = 0; p < v.size(); ++p) {
      const RLabel& l = v[p];
      SparseMatrix::Column col;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(l.I >> i & 1u)) continue;
        const int sign = parity_sign(l.j) * parity_sign(popcount(l.I)) * position_sign(l.I, i);
        const Matrix& x = mult(l.j, i, l.c);
        const Subset J = l.I & ~(Subset{1} << i);
        for (std::size_t q = 0; q < x.rows(); ++q)
          if (!x(q, l.index).is_zero()) col.emplace_back(r.position(t, l.j, J, q), signed_value(f, sign, x(q, l.index)));
      }
      if (l.j - 1 >= cv.lo()) {
        const Matrix& x = diff(l.j, l.c);
        for (std::size_t q = 0; q < x.rows(); ++q)
          if (!x(q, l.index).is_zero()) col.emplace_back(r.position(t, l.j - 1, l.I, q), x(q, l.index));
      }
      dd.set_column(p, std::move(col));
    }
    dm.set_differential(d, std::move(dd));
  }
  r.dmod = std::move(dm);
  return r;
}

std::size_t LComplex::generator(std::size_t j, const ExtDegree& d, std::size_t k) const {
  const auto& v = generators.at(j);
  auto it = std::find(v.begin(), v.end(), std::pair{d, k});
  if (it == v.end()) throw std::out_of_range("L(D): no generator at " + d.to_string());
  return static_cast<std::size_t>(it - v.begin());
}

LComplex functor_L(const Ring& ring, const DifferentialEModule& dm) {
  const EModule& m = dm.module();
  const GradingSpec& g = m.grading();
  LComplex out;
  std::vector<std::vector<ExtDegree>> by_j;
  for (const auto& d : m.degrees()) {
    if (d.j < 0) throw std::invalid_argument("L(D): negative auxiliary degree " + d.to_string());
    if (by_j.size() <= static_cast<std::size_t>(d.j)) by_j.resize(static_cast<std::size_t>(d.j) + 1);
    by_j[static_cast<std::size_t>(d.j)].push_back(d);
  }
  if (by_j.empty()) by_j.resize(1);
  std::vector<std::map<ExtDegree, std::size_t>> offset(by_j.size());
  out.generators.resize(by_j.size());
  std::vector<std::vector<Multidegree>> gdeg(by_j.size());
  for (std::size_t j = 0; j < by_j.size(); ++j) {
    auto& ds = by_j[j];
    std::sort(ds.begin(), ds.end(), [&](const ExtDegree& x, const ExtDegree& y) { return theta_then_lex(g, x.a, y.a); });
    for (const auto& d : ds) {
      offset[j][d] = out.generators[j].size();
      for (std::size_t k = 0; k < m.dim(d); ++k) {
        out.generators[j].emplace_back(d, k);
        gdeg[j].push_back(d.a);
      }
    }
  }
  out.complex = GradedComplex(&ring);
  out.complex.push_term(GradedFreeModule{gdeg[0]});
  for (std::size_t j = 1; j < by_j.size(); ++j) {
    GradedMatrix mat(&ring, gdeg[j - 1], gdeg[j]);
    for (const auto& d : by_j[j]) {
      const std::size_t col0 = offset[j][d];
      const int sign = parity_sign(d.j);
      for (std::size_t i = 0; i < g.nvars(); ++i) {
        const ExtDegree s = m.shift(i, d);
        auto it = offset[j - 1].find(s);
        if (it == offset[j - 1].end()) continue;
        const SparseMatrix a = m.sparse_action(i, d);
        for (std::size_t k = 0; k < a.cols(); ++k)
          for (const auto& [r, v] : a.column(k))
            mat.at(it->second + r, col0 + k) +=
                ring.term(Monomial::variable(static_cast<int>(i)), signed_value(ring.field(), sign, v));
      }
      const ExtDegree t{d.a, d.j - 1};
      if (auto it = offset[j - 1].find(t); it != offset[j - 1].end()) {
        const SparseMatrix dd = dm.sparse_differential(d);
        for (std::size_t k = 0; k < dd.cols(); ++k)
          for (const auto& [r, v] : dd.column(k)) mat.at(it->second + r, col0 + k) -= ring.constant(v);
      }
    }
    out.complex.push_term(GradedFreeModule{gdeg[j]}, std::move(mat));
  }
  return out;
}

LComplex functor_L(const Ring& ring, const EModule& d) { return functor_L(ring, DifferentialEModule(d)); }

KernelModule kernel_K(const ComplexView& mv, const Multidegree& a) {
  const GradingSpec& g = mv.grading();
  const Field& f = mv.field();
  const std::size_t n = g.nvars();
  const std::size_t dm = mv.dim(0, a);
  if (!dm) throw std::invalid_argument("K_a(M) needs M_a != 0, but M_" + a.to_string() + " = 0");
  KernelModule out;
  out.dim_Ma = dm;
  out.module = EModule(f, g);
  const Subset full = (Subset{1} << n) - 1;
  for (Subset I = 0; I <= full; ++I) out.subsets[{a + subset_degree(I, g), popcount(I)}].push_back(I);

  std::vector<Matrix> mult(n);
  for (std::size_t i = 0; i < n; ++i) mult[i] = mv.mult(0, i, a);

  for (const auto& [d, subs] : out.subsets) {
    std::map<std::pair<Subset, std::size_t>, std::size_t> target;  // (J, i) -> offset
    std::size_t rows = 0;
    for (Subset I : subs)
      for (std::size_t i = 0; i < n; ++i) {
        if (!(I >> i & 1u)) continue;
        auto key = std::pair{I & ~(Subset{1} << i), i};
        // summands with the same J and the same deg x_i coincide
        bool merged = false;
        for (const auto& [k, off] : target)
          if (k.first == key.first && g.var_degree(k.second) == g.var_degree(i)) {
            target.emplace(key, off);
            merged = true;
            break;
          }
        if (!merged) {
          target.emplace(key, rows);
          rows += mult[i].rows();
        }
      }
    Matrix map(f, rows, subs.size() * dm);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const Subset I = subs[s];
      for (std::size_t i = 0; i < n; ++i) {
        if (!(I >> i & 1u)) continue;
        const int sign = parity_sign(popcount(I)) * position_sign(I, i);
        const std::size_t off = target.at({I & ~(Subset{1} << i), i});
        for (std::size_t k = 0; k < dm; ++k)
          for (std::size_t q = 0; q < mult[i].rows(); ++q)
            if (!mult[i](q, k).is_zero()) map(off + q, s * dm + k) += signed_value(f, sign, mult[i](q, k));
      }
    }
    Matrix k = kernel(map);
    out.module.set_dim(d, k.cols());
    if (k.cols()) out.embedding[d] = std::move(k);
  }

  for (const auto& [d, k] : out.embedding) {
    const auto& subs = out.subsets.at(d);
    for (std::size_t i = 0; i < n; ++i) {
      const ExtDegree s = out.module.shift(i, d);
      auto it = out.embedding.find(s);
      if (it == out.embedding.end()) continue;
      const auto& tsubs = out.subsets.at(s);
      Matrix act(f, tsubs.size() * dm, subs.size() * dm);
      for (std::size_t p = 0; p < subs.size(); ++p) {
        const Subset I = subs[p];
        if (!(I >> i & 1u)) continue;
        const auto q = static_cast<std::size_t>(
            std::find(tsubs.begin(), tsubs.end(), I & ~(Subset{1} << i)) - tsubs.begin());
        for (std::size_t c = 0; c < dm; ++c) act(q * dm + c, p * dm + c) = f.from_int(position_sign(I, i));
      }
      auto x = solve(it->second, act * k);
      if (!x) throw std::logic_error("K_a(M) is not stable under the E-action");
      out.module.set_action(i, d, std::move(*x));
    }
  }
  return out;
}

namespace {

std::string degree_list(const std::vector<Multidegree>& v) {
  std::string s;
  for (const auto& d : v) s += (s.empty() ? "" : ", ") + d.to_string();
  return s.empty() ? "none" : s;
}

}  // namespace

NotMinimalDegree::NotMinimalDegree(const Multidegree& a, std::vector<Multidegree> minimal)
    : std::invalid_argument("degree " + a.to_string() + " is not minimal in Eff(M); minimal degrees: " +
                            degree_list(minimal)),
      minimal_(std::move(minimal)) {}

GradedComplex strongly_linear_strand(const PresentedModule& m, const Multidegree& a) {
  auto mins = m.minimal_effective_degrees();
  if (std::find(mins.begin(), mins.end(), a) == mins.end()) throw NotMinimalDegree(a, std::move(mins));
  const ModuleView v(m);
  return functor_L(m.ring(), kernel_K(v, a).module).complex;
}

GradedComplex strongly_linear_part(const GradedComplex& f, long theta_cap) {
  const FreeComplexView v(f);
  const RModule r = functor_R(v, theta_cap);
  return functor_L(*f.ring(), homology(r.dmod).module).complex;
}

UnitMap unit_map(const Ring& ring, const DifferentialEModule& dm, long theta_cap) {
  const EModule& m = dm.module();
  const Field& f = m.field();
  const GradingSpec& g = m.grading();
  UnitMap u;
  u.l = functor_L(ring, dm);
  u.view = std::make_unique<FreeComplexView>(u.l.complex);
  u.rl = functor_R(*u.view, theta_cap);
  const Subset full = (Subset{1} << g.nvars()) - 1;
  for (const auto& d : m.degrees()) {
    if (g.theta_of(d.a) > theta_cap) continue;
    Matrix eta(f, u.rl.dmod.module().dim(d), m.dim(d));
    for (std::size_t k = 0; k < m.dim(d); ++k)
      for (Subset I = 0; I <= full; ++I) {
        std::vector<Scalar> w(m.dim(d), f.zero());
        w[k] = f.one();
        ExtDegree cur = d;
        for (std::size_t i = 0; i < g.nvars() && !w.empty(); ++i) {
          if (!(I >> i & 1u)) continue;
          w = m.sparse_action(i, cur).apply(w);
          cur = m.shift(i, cur);
        }
        if (std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        const int jj = d.j - popcount(I);
        for (std::size_t q = 0; q < w.size(); ++q) {
          if (w[q].is_zero()) continue;
          const std::size_t gen = u.l.generator(static_cast<std::size_t>(jj), cur, q);
          const std::size_t idx = u.view->index(jj, cur.a, Monomial(), gen);
          eta(u.rl.position(d, jj, I, idx), k) += signed_value(f, parity_sign(jj), w[q]);
        }
      }
    u.eta.emplace(d, std::move(eta));
  }
  return u;
}

CounitMap counit_map(const GradedComplex& fc, long theta_cap) {
  const Ring& ring = *fc.ring();
  CounitMap c;
  c.view = std::make_unique<FreeComplexView>(fc);
  c.r = functor_R(*c.view, theta_cap);
  c.lr = functor_L(ring, c.r.dmod);
  for (std::size_t i = 0; i < c.lr.complex.size(); ++i) {
    const auto& cols = c.lr.complex.term(i).gen_degrees;
    GradedMatrix e(&ring, fc.term(i).gen_degrees, cols);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& [d, idx] = c.lr.generators[i][k];
      const RLabel& l = c.r.labels.at(d)[idx];
      if (l.I != 0) continue;
      const auto& [u, gen] = c.view->basis(l.j, l.c)[l.index];
      e.at(gen, k) = ring.term(u, ring.field().from_int(parity_sign(static_cast<long>(i))));
    }
    c.eps.push_back(std::move(e));
  }
  return c;
}

std::vector<GradedMatrix> L_of_map(const LComplex& x, const LComplex& y, const std::map<ExtDegree, Matrix>& f) {
  const Ring* ring = x.complex.ring();
  std::vector<GradedMatrix> out;
  for (std::size_t j = 0; j < x.complex.size(); ++j) {
    GradedMatrix m(ring, y.complex.term(j).gen_degrees, x.complex.term(j).gen_degrees);
    for (std::size_t k = 0; k < x.generators[j].size(); ++k) {
      const auto& [d, idx] = x.generators[j][k];
      auto it = f.find(d);
      if (it == f.end()) continue;
      for (std::size_t r = 0; r < it->second.rows(); ++r)
        if (!it->second(r, idx).is_zero()) m.at(y.generator(j, d, r), k) = ring->constant(it->second(r, idx));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::map<ExtDegree, Matrix> R_of_map(const FreeComplexView& x, const RModule& rx, const FreeComplexView& y,
                                     const RModule& ry, const std::vector<GradedMatrix>& f) {
  std::map<ExtDegree, Matrix> out;
  const Field& fld = x.field();
  for (const auto& [d, labels] : rx.labels) {
    Matrix m(fld, ry.labels.count(d) ? ry.labels.at(d).size() : 0, labels.size());
    for (std::size_t p = 0; p < labels.size(); ++p) {
      const RLabel& l = labels[p];
      if (l.j < 0 || static_cast<std::size_t>(l.j) >= f.size()) continue;
      const auto& [u, gen] = x.basis(l.j, l.c)[l.index];
      const GradedMatrix& fj = f[static_cast<std::size_t>(l.j)];
      for (std::size_t r = 0; r < fj.rows(); ++r)
        for (const auto& t : fj.at(r, gen).terms())
          m(ry.position(d, l.j, l.I, y.index(l.j, l.c, u * t.mono, r)), p) += t.coeff;
    }
    out.emplace(d, std::move(m));
  }
  return out;
}

WindowTooSmall::WindowTooSmall(long cap, long needed, std::vector<std::size_t> unreliable)
    : std::runtime_error([&] {
        std::string s = "window cap " + std::to_string(cap) + " is too small (need " + std::to_string(needed) +
                        "); unreliable homological degrees:";
        for (auto j : unreliable) s += " " + std::to_string(j);
        return s;
      }()),
      needed_(needed),
      unreliable_(std::move(unreliable)) {}

std::vector<long> schreyer_theta_bounds(const GradedMatrix& presentation, std::optional<std::size_t> length) {
  ResolutionOptions opt;
  opt.length = length;
  const GradedComplex s = schreyer_resolution(presentation, opt);
  const GradingSpec& g = presentation.ring()->grading();
  std::vector<long> out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (length && j > *length) break;
    long best = LONG_MIN;
    for (const auto& d : s.term(j).gen_degrees) best = std::max(best, g.theta_of(d));
    out.push_back(best);
  }
  return out;
}

namespace {

// Element of S (x) D: for each degree, a vector of polynomials over the basis.
using SD = std::map<ExtDegree, std::vector<Polynomial>>;

bool is_zero(const SD& v) {
  for (const auto& [d, vec] : v)
    for (const auto& p : vec)
      if (!p.is_zero()) return false;
  return true;
}

std::vector<Polynomial> apply(const Ring& ring, const Matrix& m, const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out(m.rows(), ring.zero());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out[r] += m(r, c) * v[c];
  }
  return out;
}

}  // namespace

Perturbation perturbation_resolution(const PresentedModule& m, const PerturbationOptions& opt) {
  const Ring& ring = m.ring();
  const GradingSpec& g = ring.grading();
  const Field& f = ring.field();
  const auto bounds = schreyer_theta_bounds(m.presentation(), opt.length);
  std::size_t len = bounds.size() - 1;
  long needed = LONG_MIN;
  for (auto b : bounds) needed = std::max(needed, b);
  if (needed == LONG_MIN) needed = 0;
  const long cap = opt.theta_cap.value_or(needed);
  if (cap < needed) {
    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j < bounds.size(); ++j)
      if (bounds[j] > cap) bad.push_back(j);
    throw WindowTooSmall(cap, needed, std::move(bad));
  }

  const ModuleView view(m);
  const RModule r = functor_R(view, cap);
  const Homology h = homology(r.dmod);
  const EModule& dmod = r.dmod.module();
  LComplex lh = functor_L(ring, h.module);
  len = std::min(len, lh.complex.size() - 1);

  std::map<std::pair<std::size_t, ExtDegree>, Matrix> act;
  auto action = [&](std::size_t i, const ExtDegree& d) -> const Matrix& {
    auto key = std::pair{i, d};
    auto it = act.find(key);
    if (it == act.end()) it = act.emplace(key, dmod.action(i, d)).first;
    return it->second;
  };
  // d' (s (x) v) = sum_i x_i s (x) e_i v with e_i v = (-1)^j v e_i.
  auto dprime = [&](const SD& v) {
    SD out;
    for (const auto& [d, vec] : v)
      for (std::size_t i = 0; i < g.nvars(); ++i) {
        const ExtDegree s = dmod.shift(i, d);
        if (!dmod.dim(s)) continue;
        const Polynomial xi = ring.term(Monomial::variable(static_cast<int>(i)), f.from_int(parity_sign(d.j)));
        std::vector<Polynomial> scaled;
        for (const auto& p : vec) scaled.push_back(p * xi);
        auto w = apply(ring, action(i, d), scaled);
        auto& tgt = out[s];
        if (tgt.empty()) tgt.assign(w.size(), ring.zero());
        for (std::size_t q = 0; q < w.size(); ++q) tgt[q] += w[q];
      }
    return out;
  };
  auto contract = [&](const SD& v) {
    SD out;
    for (const auto& [d, vec] : v) {
      const DegreeSplit& s = h.split.at(d);
      if (!s.nb) continue;
      const auto c = apply(ring, s.coords, vec);
      const ExtDegree up{d.a, d.j + 1};
      const DegreeSplit& su = h.split.at(up);
      auto& tgt = out[up];
      if (tgt.empty()) tgt.assign(su.basis.rows(), ring.zero());
      for (std::size_t t = 0; t < s.nb; ++t) {
        if (c[t].is_zero()) continue;
        const std::size_t col = su.nb + su.nh + t;
        for (std::size_t q = 0; q < su.basis.rows(); ++q)
          if (!su.basis(q, col).is_zero()) tgt[q] -= su.basis(q, col) * c[t];
      }
    }
    return out;
  };

  Perturbation out;
  out.theta_cap = cap;
  out.complex = GradedComplex(&ring);
  out.complex.push_term(lh.complex.term(0));
  for (std::size_t j = 1; j <= len; ++j) {
    const auto& rows = lh.complex.term(j - 1).gen_degrees;
    const auto& cols = lh.complex.term(j).gen_degrees;
    GradedMatrix mat(&ring, rows, cols);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& [d, hk] = lh.generators[j][k];
      const DegreeSplit& s = h.split.at(d);
      SD v;
      auto& vec = v[d];
      for (std::size_t q = 0; q < s.basis.rows(); ++q) vec.push_back(ring.constant(s.basis(q, s.nb + hk)));
      SD w = dprime(v);
      for (int i = 1; !is_zero(w); ++i) {
        if (i > 100000) throw std::logic_error("perturbation series does not terminate");
        for (const auto& [dd, wv] : w) {
          const DegreeSplit& sd = h.split.at(dd);
          if (!sd.nh) continue;
          const auto c = apply(ring, sd.coords, wv);
          for (std::size_t t = 0; t < sd.nh; ++t) {
            if (c[sd.nb + t].is_zero()) continue;
            const std::size_t row = lh.generator(j - 1, dd, t);
            if (i % 2)
              mat.at(row, k) += c[sd.nb + t];
            else
              mat.at(row, k) -= c[sd.nb + t];
          }
        }
        w = dprime(contract(w));
      }
    }
    out.complex.push_term(GradedFreeModule{cols}, std::move(mat));
    out.first_order.push_back(lh.complex.differential(j));
  }
  out.complex.trim();
  return out;
}

}  // namespace strandlab
