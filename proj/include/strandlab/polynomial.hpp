#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strandlab/field.hpp"
#include "strandlab/grading.hpp"

namespace strandlab {

class Polynomial;

// Ties between monomials of equal theta-weight are broken by graded reverse
// lex (the default) or by plain lex.
enum class MonomialOrder { theta_grevlex, theta_lex };

// S = k[x_0..x_n] with its grading and a global monomial order. Polynomials
// keep a raw pointer to their ring; a Ring must outlive every Polynomial
// created from it, which is why rings are handed out as shared_ptr.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(Field field, GradingSpec grading,
                                          std::vector<std::string> names = {},
                                          MonomialOrder order = MonomialOrder::theta_grevlex);

  const Field& field() const { return field_; }
  const GradingSpec& grading() const { return grading_; }
  std::size_t nvars() const { return grading_.nvars(); }
  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder order() const { return order_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  long weight(const Monomial& m) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const Scalar& c) const;
  Polynomial var(std::size_t i) const;
  Polynomial term(const Monomial& m, const Scalar& c) const;

  // Accepts sums of products of integer or a/b coefficients, variables,
  // powers with '^' and parentheses, e.g. "3*x0^2*x1 - x2".
  Polynomial parse(const std::string& text) const;
  std::string format(const Polynomial& p) const;
  std::string format(const Monomial& m) const;

  int var_index(const std::string& name) const;

 private:
  Ring(Field f, GradingSpec g, std::vector<std::string> names, MonomialOrder o);
  Field field_;
  GradingSpec grading_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse polynomial: terms sorted strictly descending in the ring order,
// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Ring* ring) : ring_(ring) {}

  const Ring* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const { return terms_.front(); }

  // Common degree of all terms; nullopt if zero or inhomogeneous.
  std::optional<Multidegree> degree() const;
  bool is_homogeneous() const;
  Scalar constant_term() const;
  // Coefficient of a monomial (zero if absent).
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);

  Polynomial times(const Monomial& m, const Scalar& c) const;

  // this + c*m*q, the inner step of reductions.
  void add_multiple(const Polynomial& q, const Monomial& m, const Scalar& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

  // Builds from unsorted terms, combining duplicates.
  static Polynomial from_terms(const Ring* ring, std::vector<Term> terms);

 private:
  const Ring* ring_ = nullptr;
  std::vector<Term> terms_;
};

// Sum that throws std::invalid_argument when both summands are nonzero and
// homogeneous of different degrees.
Polynomial add_homogeneous(const Polynomial& p, const Polynomial& q);

// True iff every term has total exponent 1 (zero counts as linear).
bool is_linear_form(const Polynomial& p);

// The A-homogeneous components of p, sorted by degree.
std::vector<std::pair<Multidegree, Polynomial>> homogeneous_components(const Polynomial& p);

}  // namespace strandlab
