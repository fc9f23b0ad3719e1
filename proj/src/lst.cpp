#include "strandlab/lst.hpp"

#include <algorithm>
#include <map>

#include "strandlab/bgg.hpp"

namespace strandlab {

IncidenceIdeal incidence_ideal(const PresentedModule& m, const Multidegree& a) {
  const GradingSpec& g = m.grading();
  const std::size_t nc = g.nvars(), ny = m.dim(a);
  if (nc + ny > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("incidence ideal needs " + std::to_string(nc + ny) + " variables, more than " +
                                std::to_string(kMaxVars));
  std::vector<Multidegree> degs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nc; ++i) {
    degs.push_back({1, 0});
    names.push_back("c" + std::to_string(i));
  }
  for (std::size_t k = 0; k < ny; ++k) {
    degs.push_back({0, 1});
    names.push_back("y" + std::to_string(k + 1));
  }
  IncidenceIdeal out;
  out.nc = nc;
  out.ny = ny;
  out.ring = Ring::make(m.ring().field(), GradingSpec(2, degs, {1, 1}), names);
  const Ring& r = *out.ring;

  std::map<Multidegree, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nc; ++i) groups[g.var_degree(i)].push_back(i);
  for (const auto& [d, vars] : groups) {
    const std::size_t rows = m.dim(a + d);
    std::vector<Polynomial> eq(rows, r.zero());
    for (std::size_t i : vars) {
      const Matrix x = m.multiplication_map(i, a);
      for (std::size_t q = 0; q < rows; ++q)
        for (std::size_t k = 0; k < ny; ++k)
          if (!x(q, k).is_zero())
            eq[q] += r.term(Monomial::variable(static_cast<int>(i)) * Monomial::variable(static_cast<int>(nc + k)),
                            x(q, k));
    }
    for (auto& p : eq)
      if (!p.is_zero()) out.equations.push_back(std::move(p));
  }
  return out;
}

namespace {

// Dimension of the chart c_i = 1, y_k = 1 of the incidence variety; -1 if empty.
int chart_dimension(const IncidenceIdeal& inc, std::size_t ci, std::size_t yk) {
  const std::size_t total = inc.nc + inc.ny;
  const std::size_t fixed_c = ci, fixed_y = inc.nc + yk;
  const std::size_t nvars = total - 2;
  const Field& f = inc.ring->field();
  if (nvars == 0) {
    for (const auto& p : inc.equations) {
      Scalar s = f.zero();
      for (const auto& t : p.terms()) s += t.coeff;
      if (!s.is_zero()) return -1;
    }
    return 0;
  }
  std::vector<int> index(total, -1);
  for (std::size_t v = 0, next = 0; v < total; ++v)
    if (v != fixed_c && v != fixed_y) index[v] = static_cast<int>(next++);
  auto chart = Ring::make(f, GradingSpec::standard(nvars));
  std::vector<Polynomial> eqs;
  for (const auto& p : inc.equations) {
    Polynomial q = chart->zero();
    for (const auto& t : p.terms()) {
      Monomial u;
      for (std::size_t v = 0; v < total; ++v)
        if (index[v] >= 0) u.set(index[v], t.mono[static_cast<int>(v)]);
      q += chart->term(u, t.coeff);
    }
    if (!q.is_zero()) eqs.push_back(std::move(q));
  }
  return krull_dimension(*chart, eqs);
}

}  // namespace

int rank_one_syzygy_dim(const PresentedModule& m, const Multidegree& a) {
  const IncidenceIdeal inc = incidence_ideal(m, a);
  int best = 0;
  for (std::size_t i = 0; i < inc.nc; ++i)
    for (std::size_t k = 0; k < inc.ny; ++k) {
      const int d = chart_dimension(inc, i, k);
      if (d >= 0) best = std::max(best, d + 1);
    }
  return best;
}

int strand_length(const GradedComplex& l) {
  for (std::size_t i = l.size(); i-- > 0;)
    if (l.term(i).rank()) return static_cast<int>(i);
  return -1;
}

LstReport lst_check(const PresentedModule& m, const Multidegree& a) {
  LstReport r;
  r.degree = a;
  r.strand_length = strand_length(strongly_linear_strand(m, a));
  r.dim_Ma = m.dim(a);
  r.dim_R = rank_one_syzygy_dim(m, a);
  r.bound = std::max(static_cast<int>(r.dim_Ma) - 1, r.dim_R);
  r.holds = r.strand_length <= r.bound;
  return r;
}

}  // namespace strandlab
