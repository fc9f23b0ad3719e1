#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/exterior.hpp"
#include "strandlab/groebner.hpp"

namespace strandlab {

// Degreewise access to a bounded complex C_lo <- ... <- C_hi of graded
// S-modules: dimensions of graded pieces, multiplication by variables and
// the differential, all as matrices over k.
class ComplexView {
 public:
  virtual ~ComplexView() = default;
  virtual const GradingSpec& grading() const = 0;
  virtual const Field& field() const = 0;
  virtual int lo() const = 0;
  virtual int hi() const = 0;
  // Every nonzero piece of C_j lies in degrees g + Eff(S) for these g.
  virtual std::vector<Multidegree> generator_degrees(int j) const = 0;
  virtual std::size_t dim(int j, const Multidegree& c) const = 0;
  // x_i : (C_j)_c -> (C_j)_{c + deg x_i}
  virtual Matrix mult(int j, std::size_t i, const Multidegree& c) const = 0;
  // (C_j)_c -> (C_{j-1})_c
  virtual Matrix diff(int j, const Multidegree& c) const = 0;
};

// A presented module, concentrated in homological degree 0.
class ModuleView : public ComplexView {
 public:
  explicit ModuleView(const PresentedModule& m) : m_(m) {}
  const GradingSpec& grading() const override { return m_.grading(); }
  const Field& field() const override { return m_.ring().field(); }
  int lo() const override { return 0; }
  int hi() const override { return 0; }
  std::vector<Multidegree> generator_degrees(int j) const override;
  std::size_t dim(int j, const Multidegree& c) const override;
  Matrix mult(int j, std::size_t i, const Multidegree& c) const override;
  Matrix diff(int j, const Multidegree& c) const override;

 private:
  const PresentedModule& m_;
};

// Restriction of scalars of a module view to S_I = k[x_i : i in vars].
// Graded pieces are unchanged; only the variables in `vars` act, renumbered
// in increasing order. As an S_I-module it need not be finitely generated,
// so generator_degrees() reports those of the base, which still bound the
// support from below.
class RestrictedView : public ComplexView {
 public:
  RestrictedView(const ComplexView& base, std::vector<int> vars);
  const GradingSpec& grading() const override { return grading_; }
  const Field& field() const override { return base_.field(); }
  int lo() const override { return base_.lo(); }
  int hi() const override { return base_.hi(); }
  std::vector<Multidegree> generator_degrees(int j) const override { return base_.generator_degrees(j); }
  std::size_t dim(int j, const Multidegree& c) const override { return base_.dim(j, c); }
  Matrix mult(int j, std::size_t i, const Multidegree& c) const override;
  Matrix diff(int j, const Multidegree& c) const override { return base_.diff(j, c); }
  const std::vector<int>& vars() const { return vars_; }

 private:
  const ComplexView& base_;
  std::vector<int> vars_;
  GradingSpec grading_;
};

RestrictedView restrict_scalars(const ComplexView& m, const std::vector<int>& vars);

// A complex of graded free modules. The basis of (F_j)_c is the list of
// pairs (monomial u, generator g) with deg u + deg g = c, ordered by g and
// then by descending lex on u. Holds its own copy of the complex.
class FreeComplexView : public ComplexView {
 public:
  explicit FreeComplexView(GradedComplex f) : f_(std::move(f)) {}
  const GradingSpec& grading() const override { return f_.ring()->grading(); }
  const Field& field() const override { return f_.ring()->field(); }
  int lo() const override { return 0; }
  int hi() const override { return static_cast<int>(f_.size()) - 1; }
  std::vector<Multidegree> generator_degrees(int j) const override;
  std::size_t dim(int j, const Multidegree& c) const override { return basis(j, c).size(); }
  Matrix mult(int j, std::size_t i, const Multidegree& c) const override;
  Matrix diff(int j, const Multidegree& c) const override;

  const std::vector<std::pair<Monomial, std::size_t>>& basis(int j, const Multidegree& c) const;
  std::size_t index(int j, const Multidegree& c, const Monomial& u, std::size_t g) const;
  const GradedComplex& complex() const { return f_; }

 private:
  struct Piece {
    std::vector<std::pair<Monomial, std::size_t>> basis;
    std::map<std::pair<Monomial, std::size_t>, std::size_t> index;
  };
  const Piece& piece(int j, const Multidegree& c) const;
  GradedComplex f_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, Multidegree>, Piece> cache_;
};

// Basis vector of R(C): basis element `index` of (C_j)_c tensor phi_I, in
// degree (c + deg I; j + |I|).
struct RLabel {
  int j = 0;
  Subset I = 0;
  std::size_t index = 0;
  Multidegree c;
};

// R(C) restricted to the degrees (b; t) with theta(b) <= theta_cap. Every
// summand contributing to such a degree has theta(c) <= theta(b), so these
// pieces are exact, and the set is closed under the differential and the
// E-action.
struct RModule {
  DifferentialEModule dmod;
  std::map<ExtDegree, std::vector<RLabel>> labels;  // sorted by (j, I, index)
  long theta_cap = 0;
  std::size_t position(const ExtDegree& d, int j, Subset I, std::size_t index) const;
};

// Differential: c (x) f -> (-1)^j sum_i x_i c (x) e_i f + d_C(c) (x) f, where
// e_i f = (-1)^{|I|} f e_i for f = phi_I.
RModule functor_R(const ComplexView& c, long theta_cap);

// L(D)_j = sum_a S(-a) (x) D_(a;j) with differential
// s (x) d -> sum_i x_i s (x) e_i d - s (x) d_D(d), where e_i d = (-1)^j d e_i.
// Generators of L(D)_j are listed by degree (theta, then lex) and basis index.
struct LComplex {
  GradedComplex complex;
  std::vector<std::vector<std::pair<ExtDegree, std::size_t>>> generators;
  std::size_t generator(std::size_t j, const ExtDegree& d, std::size_t k) const;
};
LComplex functor_L(const Ring& ring, const DifferentialEModule& d);
LComplex functor_L(const Ring& ring, const EModule& d);

// K_a(M) = ker(M_a (x) omega_E(-a; 0) -> R(M)), computed exactly. The ambient
// basis at degree (a + deg I; |I|) is (I, k) for subsets I ascending, then
// k over a basis of M_a.
struct KernelModule {
  EModule module;
  std::map<ExtDegree, Matrix> embedding;
  std::map<ExtDegree, std::vector<Subset>> subsets;
  std::size_t dim_Ma = 0;
};
KernelModule kernel_K(const ComplexView& m, const Multidegree& a);

class NotMinimalDegree : public std::invalid_argument {
 public:
  NotMinimalDegree(const Multidegree& a, std::vector<Multidegree> minimal);
  const std::vector<Multidegree>& minimal() const { return minimal_; }

 private:
  std::vector<Multidegree> minimal_;
};

// L(K_a(M)). Throws NotMinimalDegree unless a is minimal in Eff(M).
GradedComplex strongly_linear_strand(const PresentedModule& m, const Multidegree& a);

// L(H(R(F))) restricted to generators of theta-degree <= theta_cap, which
// are all exact.
GradedComplex strongly_linear_part(const GradedComplex& f, long theta_cap);

// Unit eta : D -> R L(D), d -> sum_I (-1)^{j - |I|} (d e_I) (x) phi_I for d in
// degree (a; j), where e_I is the product in increasing index order.
struct UnitMap {
  LComplex l;
  std::unique_ptr<FreeComplexView> view;
  RModule rl;
  std::map<ExtDegree, Matrix> eta;
};
UnitMap unit_map(const Ring& ring, const DifferentialEModule& d, long theta_cap);

// Counit eps : L R(F) -> F, projecting onto the summands with I empty and
// mapping s (x) c to (-1)^i s c in homological degree i.
struct CounitMap {
  std::unique_ptr<FreeComplexView> view;
  RModule r;
  LComplex lr;
  std::vector<GradedMatrix> eps;
};
CounitMap counit_map(const GradedComplex& f, long theta_cap);

// L applied to a degree-preserving morphism of E-modules.
std::vector<GradedMatrix> L_of_map(const LComplex& x, const LComplex& y, const std::map<ExtDegree, Matrix>& f);
// R applied to a chain map of free complexes, degreewise on the windowed pieces.
std::map<ExtDegree, Matrix> R_of_map(const FreeComplexView& x, const RModule& rx, const FreeComplexView& y,
                                     const RModule& ry, const std::vector<GradedMatrix>& f);

class WindowTooSmall : public std::runtime_error {
 public:
  WindowTooSmall(long cap, long needed, std::vector<std::size_t> unreliable);
  const std::vector<std::size_t>& unreliable() const { return unreliable_; }
  long needed() const { return needed_; }

 private:
  long needed_;
  std::vector<std::size_t> unreliable_;
};

struct PerturbationOptions {
  std::optional<std::size_t> length;
  std::optional<long> theta_cap;
};

// The minimal free resolution as L(H(R(M))) with differential
// sum_{i>=1} (-1)^{i-1} pi (d' h)^{i-1} d' iota, where d' is left multiplication
// by sum x_i (x) e_i and (pi, iota, h) contracts (R(M), -d) onto its homology.
// The default window is the largest theta-degree of a generator of the
// Schreyer resolution through the requested length, which bounds every
// minimal generator; a smaller explicit cap throws WindowTooSmall.
struct Perturbation {
  GradedComplex complex;
  std::vector<GradedMatrix> first_order;  // the i = 1 terms, i.e. the differential of L(H)
  long theta_cap = 0;
};
Perturbation perturbation_resolution(const PresentedModule& m, const PerturbationOptions& opt = {});

// Largest theta-degree of a Schreyer generator in each homological degree.
std::vector<long> schreyer_theta_bounds(const GradedMatrix& presentation, std::optional<std::size_t> length);

}  // namespace strandlab
