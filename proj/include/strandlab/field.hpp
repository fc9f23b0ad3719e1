#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace strandlab {

class Scalar;

// Coefficient field: either Q or F_p for a prime p < 2^31.
class Field {
 public:
  static Field prime(std::int64_t p);
  static Field rationals() { return Field(0); }

  // Parses "QQ", "rationals", "0" or a prime such as "32003".
  static Field parse(const std::string& text);

  bool is_prime() const { return p_ > 0; }
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_mpz(const mpz_class& n) const;
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

// A field element. Prime-field elements are stored as a residue in [0, p);
// rationals as an mpq. A default-constructed Scalar is an untyped zero that
// adopts the field of whatever it is combined with.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& o) : p_(o.p_), v_(o.v_), q_(o.q_ ? std::make_unique<mpq_class>(*o.q_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;

  bool is_zero() const;
  bool is_one() const;
  bool is_untyped() const { return p_ < 0; }
  // Residue in [0, p) of a prime-field element.
  std::int64_t residue() const { return v_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Prime-field residues print as the representative in (-p/2, p/2].
  std::string to_string() const;

  // Total order used only for deterministic tie-breaking.
  bool less_repr(const Scalar& o) const;

 private:
  friend class Field;
  std::int64_t p_ = -1;  // -1 untyped zero, 0 rational, >0 prime
  std::int64_t v_ = 0;
  std::unique_ptr<mpq_class> q_;  // set only over the rationals

  void adopt(const Scalar& o);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace strandlab
