#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/linalg.hpp"
#include "strandlab/polynomial.hpp"

namespace strandlab {

// Term c * m * e_comp of a vector in a free module.
struct VTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coeff;
};

// Monomial order on a free module with basis e_0..e_{m-1}. Every basis
// element carries a monomial L_i, a theta shift and an index chain key_i, and
// m e_i is compared through (m L_i, key_i): first theta(m L_i) + shift_i,
// then the ring order on m L_i, then key_i lexicographically with smaller
// entries ranking higher. With L_i = 1 and key_i = (i) this is the
// term-over-position order on F_0; induced orders give Schreyer orders.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  // Term-over-position order on a free module with the given generator degrees.
  ModuleOrder(const Ring* ring, const std::vector<Multidegree>& gen_degrees);

  const Ring* ring() const { return ring_; }
  std::size_t rank() const { return lead_.size(); }

  // Order induced on the free module whose basis element i maps to a vector
  // with leading term lead[i] (in this order).
  ModuleOrder induced(const std::vector<std::pair<Monomial, std::uint32_t>>& lead) const;

  int compare(const Monomial& a, std::uint32_t i, const Monomial& b, std::uint32_t j) const;
  long theta(const Monomial& m, std::uint32_t i) const;

 private:
  const Ring* ring_ = nullptr;
  std::vector<Monomial> lead_;
  std::vector<long> shift_;
  std::vector<std::vector<std::uint32_t>> key_;
};

// Sparse vector of a free module, terms strictly descending in some
// ModuleOrder, no zero coefficients.
struct FreeVector {
  std::vector<VTerm> terms;
  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  friend bool operator==(const FreeVector& a, const FreeVector& b);
};

FreeVector make_vector(const ModuleOrder& ord, std::vector<VTerm> terms);
// a += c * m * b
void add_multiple(const ModuleOrder& ord, FreeVector& a, const FreeVector& b, const Monomial& m, const Scalar& c);
FreeVector scale(const FreeVector& v, const Monomial& m, const Scalar& c);

FreeVector column_vector(const ModuleOrder& ord, const GradedMatrix& a, std::size_t col);
std::vector<Polynomial> to_polynomials(const Ring& ring, const FreeVector& v, std::size_t rank);

struct GBOptions {
  std::optional<long> theta_cap;  // drop pairs and inputs of theta-degree above this
};

// Reduced Groebner basis (monic leading coefficients) of the submodule
// generated by `gens`. Pairs are processed lowest theta-degree first with the
// chain criterion; the coprime criterion is used for rank-one modules.
// Output is sorted by (leading component, leading monomial descending lex).
std::vector<FreeVector> groebner_basis(const ModuleOrder& ord, std::vector<FreeVector> gens,
                                       const GBOptions& opt = {});

// Remainder of full reduction by g; quotients[k] is the coefficient of g[k].
struct Division {
  FreeVector remainder;
  std::vector<Polynomial> quotients;
};
Division divide(const ModuleOrder& ord, FreeVector v, const std::vector<FreeVector>& g, bool with_quotients);
FreeVector normal_form(const ModuleOrder& ord, FreeVector v, const std::vector<FreeVector>& g);

// Schreyer syzygies of a Groebner basis g: a Groebner basis of Syz(g) for
// ord.induced(leads of g), one per minimal generator of the lead-term module.
// Each syzygy has rank g.size(); its degree is that of its lead term.
std::vector<FreeVector> schreyer_syzygies(const ModuleOrder& ord, const std::vector<FreeVector>& g,
                                          const ModuleOrder& induced, const GBOptions& opt = {});

std::vector<std::pair<Monomial, std::uint32_t>> leads(const std::vector<FreeVector>& g);

// Krull dimension of S/I for an ideal given by generators (not necessarily
// homogeneous); -1 for the unit ideal.
int krull_dimension(const Ring& ring, const std::vector<Polynomial>& ideal);

// A graded module M = coker(F_1 -> F_0) given by a homogeneous presentation
// matrix whose rows are the generators of M and whose columns are relations.
class PresentedModule {
 public:
  explicit PresentedModule(GradedMatrix presentation);

  const Ring& ring() const { return *pres_.ring(); }
  const GradingSpec& grading() const { return ring().grading(); }
  const GradedMatrix& presentation() const { return pres_; }
  const std::vector<Multidegree>& generator_degrees() const { return pres_.row_degrees(); }
  const ModuleOrder& order() const { return order_; }
  const std::vector<FreeVector>& groebner() const { return gb_; }

  // Standard monomials (m, comp) of degree b, in (comp, descending lex) order.
  const std::vector<std::pair<Monomial, std::uint32_t>>& basis(const Multidegree& b) const;
  std::size_t dim(const Multidegree& b) const { return basis(b).size(); }

  // Coordinates in basis(b) of the class of a homogeneous vector of degree b.
  std::vector<Scalar> coordinates(const FreeVector& v, const Multidegree& b) const;
  // Matrix of multiplication by x_i : M_b -> M_{b + deg x_i}.
  Matrix multiplication_map(std::size_t i, const Multidegree& b) const;
  // Matrix of multiplication by a monomial.
  Matrix multiplication_map(const Monomial& u, const Multidegree& b) const;

  // Degrees d of generators with M_d != 0, minimal under the effective order.
  std::vector<Multidegree> minimal_effective_degrees() const;

 private:
  GradedMatrix pres_;
  ModuleOrder order_;
  std::vector<FreeVector> gb_;
  struct Piece {
    std::vector<std::pair<Monomial, std::uint32_t>> basis;
    std::map<std::pair<Monomial, std::uint32_t>, std::size_t> index;
  };
  const Piece& piece(const Multidegree& b) const;

  mutable std::mutex mu_;
  mutable std::map<Multidegree, Piece> cache_;
};

}  // namespace strandlab
