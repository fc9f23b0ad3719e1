#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strandlab/grading.hpp"
#include "strandlab/linalg.hpp"
#include "strandlab/sparse.hpp"

namespace strandlab {

// Degree in A + Z: the A-part and the auxiliary degree. deg(e_i) = (-deg x_i; -1).
struct ExtDegree {
  Multidegree a;
  int j = 0;
  friend bool operator==(const ExtDegree&, const ExtDegree&) = default;
  friend auto operator<=>(const ExtDegree&, const ExtDegree&) = default;
  std::string to_string() const;
};

// Subsets of {0..n} are bitmasks.
using Subset = std::uint32_t;

// Sign of e_I * e_J = sign * e_{I u J}; 0 if I and J meet.
int koszul_sign(Subset I, Subset J);
// (-1)^{#{k in I : k < i}}
int position_sign(Subset I, std::size_t i);
int popcount(Subset I);
Multidegree subset_degree(Subset I, const GradingSpec& g);

// Element of E = Lambda(e_0..e_n): subset -> coefficient.
class EElement {
 public:
  EElement() = default;
  static EElement unit(const Field& f);
  static EElement generator(const Field& f, std::size_t i);

  const std::map<Subset, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  EElement& operator+=(const EElement& o);
  friend EElement operator+(EElement a, const EElement& b) { return a += b; }
  friend EElement operator*(const EElement& a, const EElement& b);
  friend EElement operator*(const Scalar& c, const EElement& a);
  friend bool operator==(const EElement&, const EElement&);

 private:
  std::map<Subset, Scalar> terms_;
};

// Finite-dimensional graded right E-module stored degreewise: a dimension
// for each ExtDegree and, for each variable i, the matrix of right
// multiplication by e_i from degree d to shift(i, d).
class EModule {
 public:
  EModule() = default;
  EModule(Field f, GradingSpec g) : field_(f), grading_(std::move(g)) {}

  const Field& field() const { return field_; }
  const GradingSpec& grading() const { return grading_; }
  std::size_t nvars() const { return grading_.nvars(); }

  void set_dim(const ExtDegree& d, std::size_t n);
  std::size_t dim(const ExtDegree& d) const;
  // Degrees with nonzero dimension, ascending.
  std::vector<ExtDegree> degrees() const;
  std::size_t total_dim() const;

  ExtDegree shift(std::size_t i, const ExtDegree& d) const;
  void set_action(std::size_t i, const ExtDegree& d, const Matrix& m);
  void set_action(std::size_t i, const ExtDegree& d, SparseMatrix m);
  // Zero matrix of the right shape when unset.
  Matrix action(std::size_t i, const ExtDegree& d) const;
  SparseMatrix sparse_action(std::size_t i, const ExtDegree& d) const;

  // a(e_i) a(e_j) + a(e_j) a(e_i) = 0 on every piece, all i, j.
  bool anticommutes() const;

 private:
  Field field_ = Field::prime(32003);
  GradingSpec grading_;
  std::map<ExtDegree, std::size_t> dims_;
  std::map<std::pair<std::size_t, ExtDegree>, SparseMatrix> act_;
};

// EModule with a square-zero, right E-linear differential of degree (0; -1).
class DifferentialEModule {
 public:
  DifferentialEModule() = default;
  explicit DifferentialEModule(EModule m) : mod_(std::move(m)) {}

  const EModule& module() const { return mod_; }
  EModule& module() { return mod_; }

  void set_differential(const ExtDegree& d, const Matrix& m);
  void set_differential(const ExtDegree& d, SparseMatrix m);
  // Matrix D_d -> D_{(a; j-1)}; zero when unset.
  Matrix differential(const ExtDegree& d) const;
  SparseMatrix sparse_differential(const ExtDegree& d) const;

  bool squares_to_zero() const;
  // d(m e_i) = d(m) e_i for all i on every piece.
  bool is_e_linear() const;

 private:
  EModule mod_;
  std::map<ExtDegree, SparseMatrix> diff_;
};

// omega_E = Hom_k(E, k) with basis phi_I = e_I^* in degree (sum_{i in I} deg x_i; |I|)
// and phi_I e_i = position_sign(I, i) phi_{I - i} for i in I. The socle is
// phi_emptyset in degree (0; 0). Basis at each degree: subsets ascending.
EModule omega_E(const Field& f, const GradingSpec& g);
std::vector<Subset> omega_basis(const GradingSpec& g, const ExtDegree& d);

// Degreewise splitting D_d = B_d + H_d + L_d used for homology and for the
// contraction onto homology: L_d complements the cycles, B_d = d(L_{d+(0;1)})
// (so the differential maps the L basis onto the B basis), H_d extends B_d to
// the cycles. `basis` has columns B | H | L and `coords` is its inverse.
struct DegreeSplit {
  Matrix basis;
  Matrix coords;
  std::size_t nb = 0, nh = 0, nl = 0;
};

struct Homology {
  EModule module;
  std::map<ExtDegree, DegreeSplit> split;
};

// Homology with induced e_i-actions. Every degree of the input is computed
// exactly, so callers are responsible for passing a module closed under the
// differential (as all windowed constructions here are).
Homology homology(const DifferentialEModule& d);

// Largest graded subspace killed by every e_i with i not in `vars`, as a
// module over the exterior algebra on `vars` (renumbered in increasing
// order). `embedding` gives its basis in coordinates of the input.
struct SubEModule {
  EModule module;
  std::map<ExtDegree, Matrix> embedding;
};
SubEModule submodule_annihilated_by(const EModule& d, const std::vector<int>& vars);

// Mapping cone of a morphism f : X -> Y of differential E-modules; f given
// degreewise (X_d -> Y_d). The cone is exact iff f is a quasi-isomorphism.
DifferentialEModule mapping_cone(const DifferentialEModule& x, const DifferentialEModule& y,
                                 const std::map<ExtDegree, Matrix>& f);
std::size_t homology_dim(const DifferentialEModule& d, const ExtDegree& deg);

}  // namespace strandlab
