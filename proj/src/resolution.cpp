#include "strandlab/resolution.hpp"

#include <map>
#include <stdexcept>

namespace strandlab {

namespace {

Multidegree vector_degree(const FreeVector& v, const std::vector<Multidegree>& basis_degrees, const GradingSpec& g) {
  return g.degree(v.lead().mono) + basis_degrees[v.lead().comp];
}

GradedMatrix to_matrix(const Ring* ring, const std::vector<Multidegree>& rows, const std::vector<Multidegree>& cols,
                       const std::vector<FreeVector>& vs) {
  GradedMatrix m(ring, rows, cols);
  for (std::size_t c = 0; c < vs.size(); ++c) {
    auto polys = to_polynomials(*ring, vs[c], rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, c) = std::move(polys[r]);
  }
  return m;
}

}  // namespace

GradedComplex schreyer_resolution(const GradedMatrix& presentation, const ResolutionOptions& opt) {
  const Ring* ring = presentation.ring();
  const GradingSpec& g = ring->grading();
  presentation.check_homogeneous();
  GBOptions gbo;
  gbo.theta_cap = opt.theta_cap;

  GradedComplex out(ring);
  std::vector<Multidegree> prev = presentation.row_degrees();
  out.push_term(GradedFreeModule{prev});

  ModuleOrder ord(ring, prev);
  std::vector<FreeVector> gens;
  for (std::size_t c = 0; c < presentation.cols(); ++c) gens.push_back(column_vector(ord, presentation, c));
  std::vector<FreeVector> level = groebner_basis(ord, std::move(gens), gbo);

  const std::size_t max_len = opt.length ? *opt.length + 1 : static_cast<std::size_t>(-1);
  for (std::size_t i = 1; i <= max_len && !level.empty(); ++i) {
    std::vector<Multidegree> degs;
    for (const auto& v : level) degs.push_back(vector_degree(v, prev, g));
    out.push_term(GradedFreeModule{degs}, to_matrix(ring, prev, degs, level));
    if (i == max_len) break;
    ModuleOrder next = ord.induced(leads(level));
    std::vector<FreeVector> syz = schreyer_syzygies(ord, level, next, gbo);
    ord = std::move(next);
    level = std::move(syz);
    prev = std::move(degs);
  }
  return out;
}

Resolution free_resolution(const GradedMatrix& presentation, const ResolutionOptions& opt) {
  GradedComplex s = schreyer_resolution(presentation, opt);
  MinimizeResult m = minimize_tracked(s);
  Resolution r;
  r.complex = opt.length ? m.complex.truncated(*opt.length) : std::move(m.complex);
  r.complex.trim();
  r.kept_generators = m.kept.empty() ? std::vector<std::size_t>{} : m.kept[0];
  return r;
}

std::optional<std::vector<Polynomial>> solve_homogeneous(const GradedMatrix& a, const std::vector<Polynomial>& b,
                                                         const Multidegree& degree) {
  const Ring* ring = a.ring();
  const GradingSpec& g = ring->grading();
  std::map<std::pair<Monomial, std::size_t>, std::size_t> row_index;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& m : monomials_of_degree(degree - a.row_degrees()[r], g)) row_index.emplace(std::pair{m, r}, row_index.size());
  std::vector<std::pair<Monomial, std::size_t>> unknowns;
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (const auto& m : monomials_of_degree(degree - a.col_degrees()[c], g)) unknowns.emplace_back(m, c);

  Matrix lhs(ring->field(), row_index.size(), unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto& [u, c] = unknowns[k];
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& t : a.at(r, c).terms()) lhs(row_index.at({u * t.mono, r}), k) += t.coeff;
  }
  std::vector<Scalar> rhs(row_index.size(), ring->field().zero());
  for (std::size_t r = 0; r < b.size(); ++r)
    for (const auto& t : b[r].terms()) {
      auto it = row_index.find({t.mono, r});
      if (it == row_index.end()) throw std::invalid_argument("solve_homogeneous: right side has wrong degree");
      rhs[it->second] += t.coeff;
    }
  auto x = solve(lhs, rhs);
  if (!x) return std::nullopt;
  std::vector<std::vector<Term>> parts(a.cols());
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (!(*x)[k].is_zero()) parts[unknowns[k].second].push_back(Term{unknowns[k].first, (*x)[k]});
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

std::optional<std::vector<GradedMatrix>> lift_chain_map(const GradedComplex& gc, const GradedComplex& fc,
                                                        const GradedMatrix& phi0) {
  const Ring* ring = fc.ring() ? fc.ring() : gc.ring();
  std::vector<GradedMatrix> phi{phi0};
  for (std::size_t i = 1; i < gc.size(); ++i) {
    const auto& gd = gc.term(i).gen_degrees;
    const auto& fd = fc.term(i).gen_degrees;
    GradedMatrix m(ring, fd, gd);
    if (!gd.empty()) {
      const GradedMatrix target = phi[i - 1] * gc.differential(i);
      if (fd.empty() && !target.is_zero()) return std::nullopt;
      if (!fd.empty()) {
        const GradedMatrix& d = fc.differential(i);
        for (std::size_t c = 0; c < gd.size(); ++c) {
          auto x = solve_homogeneous(d, target.column(c), gd[c]);
          if (!x) return std::nullopt;
          for (std::size_t r = 0; r < fd.size(); ++r) m.at(r, c) = (*x)[r];
        }
      }
    }
    phi.push_back(std::move(m));
  }
  return phi;
}

bool is_quasi_split(const std::vector<GradedMatrix>& phi) {
  for (const auto& p : phi) {
    if (p.cols() == 0) continue;
    if (p.rows() < p.cols()) return false;
    const Field& f = p.ring()->field();
    Matrix c(f, p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t k = 0; k < p.cols(); ++k) c(r, k) = p.at(r, k).constant_term();
    if (rank(c) != p.cols()) return false;
  }
  return true;
}

}  // namespace strandlab
