#pragma once

#include <optional>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/groebner.hpp"

namespace strandlab {

struct ResolutionOptions {
  // Homological degrees 0..length are returned; nullopt means complete.
  std::optional<std::size_t> length;
  // Only generators of theta-degree <= cap are computed. Everything returned
  // is exact in those degrees.
  std::optional<long> theta_cap;
};

// Minimal graded free resolution of coker(presentation). F_0 is the
// minimized set of generators; `kept_generators` lists which rows of the
// presentation survive as generators of F_0, in order.
struct Resolution {
  GradedComplex complex;
  std::vector<std::size_t> kept_generators;
};

Resolution free_resolution(const GradedMatrix& presentation, const ResolutionOptions& opt = {});

// The Schreyer resolution before minimization (each d_i is a Groebner basis
// of the previous syzygy module).
GradedComplex schreyer_resolution(const GradedMatrix& presentation, const ResolutionOptions& opt = {});

// Chain map phi : G -> F over the identity on the homological-degree-0 data
// given by phi0 (a matrix F_0 <- G_0), found by solving degreewise linear
// systems. nullopt if some lift does not exist. phi[i] : G_i -> F_i.
std::optional<std::vector<GradedMatrix>> lift_chain_map(const GradedComplex& g, const GradedComplex& f,
                                                        const GradedMatrix& phi0);

// True iff every phi_i has an injective constant part (phi_i tensor k), so
// that the image is a direct summand in each homological degree.
bool is_quasi_split(const std::vector<GradedMatrix>& phi);

// Solves a * x = b for a homogeneous column x with entries of prescribed
// degree, where b is a homogeneous vector in the target of a. Linear algebra
// in a single multidegree.
std::optional<std::vector<Polynomial>> solve_homogeneous(const GradedMatrix& a, const std::vector<Polynomial>& b,
                                                         const Multidegree& degree);

}  // namespace strandlab
