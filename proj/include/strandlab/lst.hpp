#pragma once

#include <memory>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/groebner.hpp"

namespace strandlab {

// Incidence ideal of rank-one linear syzygies in coordinates
// (c_0..c_n, y_1..y_t) on W x M_a, W the span of the variables. For each
// degree d occurring among the variables there is one block of equations
// (sum_{deg x_i = d} c_i x_i) m = 0 in M_{a+d}, with m = sum y_k m_k. The ring
// is Z^2-graded with deg c_i = (1,0) and deg y_k = (0,1), so every equation
// is bihomogeneous of bidegree (1,1).
struct IncidenceIdeal {
  std::shared_ptr<const Ring> ring;
  std::vector<Polynomial> equations;
  std::size_t nc = 0, ny = 0;
};
IncidenceIdeal incidence_ideal(const PresentedModule& m, const Multidegree& a);

// dim R_a(M), where R_a(M) is the set of w (x) m with every homogeneous
// component of w killing m. Components inside {c = 0} or {y = 0} are
// discarded by working in the charts c_i = 1, y_k = 1; each chart has
// dimension dim R_a(M) - 1. Returns 0 when only the zero tensor remains.
int rank_one_syzygy_dim(const PresentedModule& m, const Multidegree& a);

// Largest i with L_i != 0, or -1 for the zero complex.
int strand_length(const GradedComplex& l);

struct LstReport {
  Multidegree degree;
  int strand_length = 0;
  std::size_t dim_Ma = 0;
  int dim_R = 0;
  int bound = 0;
  bool holds = false;
};

// Throws NotMinimalDegree unless a is minimal in Eff(M).
LstReport lst_check(const PresentedModule& m, const Multidegree& a);

}  // namespace strandlab
