#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace strandlab {

// An element of the grading group Z^r.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::size_t r) : c_(r, 0) {}
  Multidegree(std::initializer_list<int> v) : c_(v) {}
  explicit Multidegree(std::vector<int> v) : c_(std::move(v)) {}

  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const;

  Multidegree& operator+=(const Multidegree& o);
  Multidegree& operator-=(const Multidegree& o);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
  Multidegree operator-() const;
  friend Multidegree operator*(int k, Multidegree a);

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  // "(a_1,...,a_r)"
  std::string to_string() const;
  static Multidegree parse(const std::string& text);

 private:
  std::vector<int> c_;
};

inline constexpr int kMaxVars = 16;

// Exponent vector of a monomial in at most kMaxVars variables.
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial variable(int i) {
    Monomial m;
    m.e_[i] = 1;
    return m;
  }

  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) { e_[i] = static_cast<std::int16_t>(v); }

  int total_degree() const;
  bool is_one() const { return total_degree() == 0; }
  bool divides(const Monomial& o) const;
  // Variables with nonzero exponent all lie in the given mask.
  bool supported_in(std::uint32_t mask) const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  // Plain lexicographic comparison (x0 most significant).
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVars> e_;
};

// The grading of S = k[x_0..x_n] by Z^r together with a positivity witness.
class GradingSpec {
 public:
  GradingSpec() = default;
  GradingSpec(std::size_t r, std::vector<Multidegree> var_degrees, std::vector<int> theta);

  // Z-grading with the given variable weights, theta = (1).
  static GradingSpec weighted(const std::vector<int>& weights);
  static GradingSpec standard(std::size_t nvars);

  std::size_t rank() const { return r_; }
  std::size_t nvars() const { return degs_.size(); }
  const Multidegree& var_degree(std::size_t i) const { return degs_[i]; }
  const std::vector<Multidegree>& var_degrees() const { return degs_; }
  const std::vector<int>& theta() const { return theta_; }

  long theta_of(const Multidegree& a) const;
  int theta_of_var(std::size_t i) const { return theta_var_[i]; }
  int max_theta_var() const;

  Multidegree zero() const { return Multidegree(r_); }
  Multidegree degree(const Monomial& m) const;

  // Restriction to the variables in `vars` (same group, same theta).
  GradingSpec restrict_to(const std::vector<int>& vars) const;

 private:
  std::size_t r_ = 1;
  std::vector<Multidegree> degs_;
  std::vector<int> theta_;
  std::vector<int> theta_var_;
};

bool validate_positive(const GradingSpec& spec);

// Searches integer vectors with entries in [-10, 10] for a positivity witness.
std::optional<std::vector<int>> find_theta(std::size_t r, const std::vector<Multidegree>& var_degrees);

// Exponent vectors of degree a, in descending lexicographic order.
std::vector<Monomial> monomials_of_degree(const Multidegree& a, const GradingSpec& spec);

// True iff b - a is a nonnegative integer combination of the variable degrees.
bool eff_leq(const Multidegree& a, const Multidegree& b, const GradingSpec& spec);

// All degrees g + deg(u) for monomials u, with theta of the result <= cap.
std::vector<Multidegree> degrees_above(const Multidegree& g, long cap, const GradingSpec& spec);

// Minimal elements of a finite set of degrees under eff_leq, in input order.
std::vector<Multidegree> minimal_elements(const std::vector<Multidegree>& degs,
                                          const GradingSpec& spec);

}  // namespace strandlab
