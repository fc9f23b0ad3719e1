#include "strandlab/field.hpp"

#include <ostream>
#include <stdexcept>

namespace strandlab {

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime_number(p) || p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " +
                                std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "QQ" || text == "rationals" || text == "Q" || text == "0")
    return rationals();
  std::size_t used = 0;
  long long p = 0;
  try {
    p = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("unrecognized field: " + text);
  }
  if (used != text.size()) throw std::invalid_argument("unrecognized field: " + text);
  return prime(p);
}

std::string Field::name() const {
  return is_prime() ? "ZZ/" + std::to_string(p_) : "QQ";
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  Scalar s;
  s.p_ = p_;
  if (p_ > 0) {
    n %= p_;
    if (n < 0) n += p_;
    s.v_ = n;
  } else {
    s.q_ = std::make_unique<mpq_class>(static_cast<long>(n));
  }
  return s;
}

Scalar Field::from_mpz(const mpz_class& n) const {
  Scalar s;
  s.p_ = p_;
  if (p_ > 0) {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    s.v_ = r.get_si();
  } else {
    s.q_ = std::make_unique<mpq_class>(n);
  }
  return s;
}

Scalar Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (p_ > 0) return from_mpz(num) / from_mpz(den);
  Scalar s;
  s.p_ = 0;
  s.q_ = std::make_unique<mpq_class>(num, den);
  s.q_->canonicalize();
  return s;
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  p_ = o.p_;
  v_ = o.v_;
  if (!o.q_)
    q_.reset();
  else if (q_)
    *q_ = *o.q_;
  else
    q_ = std::make_unique<mpq_class>(*o.q_);
  return *this;
}

bool Scalar::is_zero() const {
  if (p_ < 0) return true;
  if (p_ > 0) return v_ == 0;
  return *q_ == 0;
}

bool Scalar::is_one() const {
  if (p_ < 0) return false;
  if (p_ > 0) return v_ == 1;
  return *q_ == 1;
}

void Scalar::adopt(const Scalar& o) {
  p_ = o.p_;
  v_ = 0;
  q_.reset();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ > 0) {
    r.v_ = v_ == 0 ? 0 : p_ - v_;
  } else if (p_ == 0) {
    *r.q_ = -*q_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field");
  Scalar r = *this;
  if (p_ > 0) {
    r.v_ = inverse_mod(v_, p_);
  } else {
    *r.q_ = 1 / *q_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.p_ < 0) return *this;
  if (p_ < 0) return *this = o;
  if (p_ > 0) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
  } else {
    *q_ += *o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.p_ < 0) return *this;
  if (p_ < 0) return *this = -o;
  if (p_ > 0) {
    v_ -= o.v_;
    if (v_ < 0) v_ += p_;
  } else {
    *q_ -= *o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ < 0) return *this;
  if (o.p_ < 0) {
    adopt(o);
    return *this;
  }
  if (p_ > 0) {
    v_ = (v_ * o.v_) % p_;
  } else {
    *q_ *= *o.q_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.p_ > 0) return a.v_ == b.v_;
  return *a.q_ == *b.q_;
}

bool Scalar::less_repr(const Scalar& o) const {
  if (p_ > 0 || o.p_ > 0) return (p_ > 0 ? v_ : 0) < (o.p_ > 0 ? o.v_ : 0);
  if (p_ < 0 || o.p_ < 0) return (p_ < 0 ? mpq_class(0) : *q_) < (o.p_ < 0 ? mpq_class(0) : *o.q_);
  return *q_ < *o.q_;
}

std::string Scalar::to_string() const {
  if (p_ < 0) return "0";
  if (p_ > 0) {
    std::int64_t v = v_ > p_ / 2 ? v_ - p_ : v_;
    return std::to_string(v);
  }
  return q_->get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace strandlab
