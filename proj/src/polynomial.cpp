#include "strandlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace strandlab {

Ring::Ring(Field f, GradingSpec g, std::vector<std::string> names, MonomialOrder o)
    : field_(f), grading_(std::move(g)), names_(std::move(names)), order_(o) {
  if (names_.empty())
    for (std::size_t i = 0; i < grading_.nvars(); ++i) names_.push_back("x" + std::to_string(i));
  if (names_.size() != grading_.nvars())
    throw std::invalid_argument("number of variable names does not match the grading");
}

std::shared_ptr<const Ring> Ring::make(Field field, GradingSpec grading,
                                       std::vector<std::string> names, MonomialOrder order) {
  return std::shared_ptr<const Ring>(new Ring(field, std::move(grading), std::move(names), order));
}

long Ring::weight(const Monomial& m) const {
  long w = 0;
  for (std::size_t i = 0; i < nvars(); ++i) w += static_cast<long>(m[static_cast<int>(i)]) * grading_.theta_of_var(i);
  return w;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const long wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  const int n = static_cast<int>(nvars());
  if (order_ == MonomialOrder::theta_lex) {
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const int ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Polynomial Ring::zero() const { return Polynomial(this); }
Polynomial Ring::one() const { return constant(field_.one()); }
Polynomial Ring::constant(const Scalar& c) const { return term(Monomial(), c); }
Polynomial Ring::var(std::size_t i) const { return term(Monomial::variable(static_cast<int>(i)), field_.one()); }
Polynomial Ring::term(const Monomial& m, const Scalar& c) const {
  return Polynomial::from_terms(this, {Term{m, c}});
}

int Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

class Parser {
 public:
  Parser(const Ring& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  const Ring& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial \"" + s_ + "\": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    while (eat('*')) p = p * unary();
    return p;
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      const int e = std::stoi(digits);
      Polynomial r = ring_.one();
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }
  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::string d = read_digits();
        if (d.empty()) fail("expected denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      return ring_.constant(ring_.field().from_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      const int idx = ring_.var_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return ring_.var(static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Polynomial Ring::parse(const std::string& text) const { return Parser(*this, text).run(); }

std::string Ring::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < nvars(); ++i) {
    const int e = m[static_cast<int>(i)];
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Ring::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const std::string m = format(t.mono);
    if (m.empty())
      s += c;
    else if (c == "1")
      s += m;
    else
      s += c + "*" + m;
  }
  return s;
}

std::optional<Multidegree> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& g = ring_->grading();
  Multidegree d = g.degree(terms_.front().mono);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (g.degree(terms_[i].mono) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_ ? ring_->field().zero() : Scalar();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return ring_ ? ring_->field().zero() : Scalar();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two descending term lists with a := a + c*m*b.
void merge_into(const Ring& ring, std::vector<Term>& a, const std::vector<Term>& b,
                const Monomial& m, const Scalar& c) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(a[i++]));
      continue;
    }
    Monomial bm = b[j].mono * m;
    if (i == a.size()) {
      out.push_back(Term{bm, b[j].coeff * c});
      ++j;
      continue;
    }
    const int cmp = ring.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      out.push_back(Term{bm, b[j].coeff * c});
      ++j;
    } else {
      Scalar s = a[i].coeff + b[j].coeff * c;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

const Ring* pick_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring())
    throw std::invalid_argument("polynomials from different rings");
  return a.ring() ? a.ring() : b.ring();
}

}  // namespace

void Polynomial::add_multiple(const Polynomial& q, const Monomial& m, const Scalar& c) {
  if (q.is_zero() || c.is_zero()) return;
  ring_ = pick_ring(*this, q);
  merge_into(*ring_, terms_, q.terms_, m, c);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  ring_ = pick_ring(*this, o);
  merge_into(*ring_, terms_, o.terms_, Monomial(), ring_->field().one());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  ring_ = pick_ring(*this, o);
  merge_into(*ring_, terms_, o.terms_, Monomial(), -ring_->field().one());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Ring* ring = pick_ring(a, b);
  Polynomial r(ring);
  if (a.is_zero() || b.is_zero()) return r;
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  for (const auto& t : small.terms_) r.add_multiple(big, t.mono, t.coeff);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c.is_zero()) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::string Polynomial::to_string() const { return ring_ ? ring_->format(*this) : "0"; }

Polynomial Polynomial::from_terms(const Ring* ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ring->compare(x.mono, y.mono) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial add_homogeneous(const Polynomial& p, const Polynomial& q) {
  if (!p.is_zero() && !q.is_zero()) {
    auto dp = p.degree(), dq = q.degree();
    if (!dp || !dq || *dp != *dq)
      throw std::invalid_argument("sum of homogeneous polynomials of different degrees");
  }
  return p + q;
}

bool is_linear_form(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Term& t) { return t.mono.total_degree() == 1; });
}

std::vector<std::pair<Multidegree, Polynomial>> homogeneous_components(const Polynomial& p) {
  std::map<Multidegree, std::vector<Term>> parts;
  for (const auto& t : p.terms()) parts[p.ring()->grading().degree(t.mono)].push_back(t);
  std::vector<std::pair<Multidegree, Polynomial>> out;
  for (auto& [d, ts] : parts) out.emplace_back(d, Polynomial::from_terms(p.ring(), std::move(ts)));
  return out;
}

}  // namespace strandlab
