#include "strandlab/grading.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strandlab {

bool Multidegree::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

Multidegree& Multidegree::operator+=(const Multidegree& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("multidegree rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("multidegree rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multidegree Multidegree::operator-() const {
  Multidegree m = *this;
  for (auto& v : m.c_) v = -v;
  return m;
}

Multidegree operator*(int k, Multidegree a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

std::string Multidegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

Multidegree Multidegree::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("expected a multidegree like (1,0): " + text);
  std::vector<int> v;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multidegree entry '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad multidegree entry '" + part + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty multidegree");
  return Multidegree(std::move(v));
}

int Monomial::total_degree() const {
  int s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::supported_in(std::uint32_t mask) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[i] != 0 && !(mask >> i & 1u)) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int i = 0; i < kMaxVars; ++i) e_[i] = static_cast<std::int16_t>(e_[i] + o.e_[i]);
  return *this;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::int16_t>(e_[i] - d.e_[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e_) h = (h ^ static_cast<std::uint16_t>(v)) * 1099511628211ull;
  return h;
}

GradingSpec::GradingSpec(std::size_t r, std::vector<Multidegree> var_degrees, std::vector<int> theta)
    : r_(r), degs_(std::move(var_degrees)), theta_(std::move(theta)) {
  if (r_ == 0) throw std::invalid_argument("grading rank must be positive");
  if (degs_.empty() || degs_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("number of variables must be between 1 and " +
                                std::to_string(kMaxVars));
  if (theta_.size() != r_) throw std::invalid_argument("theta has wrong length");
  for (const auto& d : degs_)
    if (d.rank() != r_) throw std::invalid_argument("variable degree has wrong rank");
  for (const auto& d : degs_) {
    long t = 0;
    for (std::size_t k = 0; k < r_; ++k) t += static_cast<long>(theta_[k]) * d[k];
    theta_var_.push_back(static_cast<int>(t));
  }
}

GradingSpec GradingSpec::weighted(const std::vector<int>& weights) {
  std::vector<Multidegree> d;
  for (int w : weights) d.push_back(Multidegree{w});
  return GradingSpec(1, std::move(d), {1});
}

GradingSpec GradingSpec::standard(std::size_t nvars) {
  return weighted(std::vector<int>(nvars, 1));
}

long GradingSpec::theta_of(const Multidegree& a) const {
  long t = 0;
  for (std::size_t k = 0; k < r_; ++k) t += static_cast<long>(theta_[k]) * a[k];
  return t;
}

int GradingSpec::max_theta_var() const {
  return *std::max_element(theta_var_.begin(), theta_var_.end());
}

Multidegree GradingSpec::degree(const Monomial& m) const {
  Multidegree d(r_);
  for (std::size_t i = 0; i < degs_.size(); ++i)
    if (m[static_cast<int>(i)]) d += m[static_cast<int>(i)] * degs_[i];
  return d;
}

GradingSpec GradingSpec::restrict_to(const std::vector<int>& vars) const {
  std::vector<Multidegree> d;
  for (int v : vars) d.push_back(degs_.at(static_cast<std::size_t>(v)));
  return GradingSpec(r_, std::move(d), theta_);
}

bool validate_positive(const GradingSpec& spec) {
  for (std::size_t i = 0; i < spec.nvars(); ++i)
    if (spec.theta_of(spec.var_degree(i)) <= 0) return false;
  return true;
}

std::optional<std::vector<int>> find_theta(std::size_t r, const std::vector<Multidegree>& var_degrees) {
  std::vector<int> t(r, -10);
  while (true) {
    bool ok = true;
    for (const auto& d : var_degrees) {
      long s = 0;
      for (std::size_t k = 0; k < r; ++k) s += static_cast<long>(t[k]) * d[k];
      if (s <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
    std::size_t k = 0;
    while (k < r && t[k] == 10) t[k++] = -10;
    if (k == r) return std::nullopt;
    ++t[k];
  }
}

namespace {

// Depth-first enumeration of exponent vectors of degree `target`, variable 0
// first with the largest exponent first (descending lex). Stops early when
// `visit` returns false.
void enumerate_degree(const Multidegree& target, const GradingSpec& spec,
                      const std::function<bool(const Monomial&)>& visit) {
  const long budget = spec.theta_of(target);
  if (budget < 0) return;
  const int n = static_cast<int>(spec.nvars());
  Monomial cur;
  Multidegree acc = spec.zero();
  bool stop = false;
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (stop) return;
    if (i == n) {
      if (acc == target && !visit(cur)) stop = true;
      return;
    }
    const int w = spec.theta_of_var(static_cast<std::size_t>(i));
    if (w <= 0) throw std::invalid_argument("grading is not positive for the given theta");
    const long maxe = left / w;
    for (long e = maxe; e >= 0 && !stop; --e) {
      cur.set(i, static_cast<int>(e));
      Multidegree step = static_cast<int>(e) * spec.var_degree(static_cast<std::size_t>(i));
      acc += step;
      rec(i + 1, left - e * w);
      acc -= step;
    }
    cur.set(i, 0);
  };
  rec(0, budget);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Multidegree& a, const GradingSpec& spec) {
  std::vector<Monomial> out;
  enumerate_degree(a, spec, [&](const Monomial& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool eff_leq(const Multidegree& a, const Multidegree& b, const GradingSpec& spec) {
  const Multidegree diff = b - a;
  if (spec.theta_of(diff) < 0) return false;
  bool found = false;
  enumerate_degree(diff, spec, [&](const Monomial&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Multidegree> degrees_above(const Multidegree& g, long cap, const GradingSpec& spec) {
  std::set<Multidegree> seen;
  const long base = spec.theta_of(g);
  if (base > cap) return {};
  const std::size_t n = spec.nvars();
  std::function<void(std::size_t, Multidegree, long)> rec = [&](std::size_t i, Multidegree d, long t) {
    if (i == n) {
      seen.insert(d);
      return;
    }
    const int w = spec.theta_of_var(i);
    if (w <= 0) throw std::invalid_argument("grading is not positive for the given theta");
    for (long e = 0; t + e * w <= cap; ++e) {
      rec(i + 1, d, t + e * w);
      d += spec.var_degree(i);
    }
  };
  rec(0, g, base);
  return {seen.begin(), seen.end()};
}

std::vector<Multidegree> minimal_elements(const std::vector<Multidegree>& degs, const GradingSpec& spec) {
  std::vector<Multidegree> out;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < degs.size() && minimal; ++j)
      if (degs[j] != degs[i] && eff_leq(degs[j], degs[i], spec)) minimal = false;
    if (minimal && std::find(out.begin(), out.end(), degs[i]) == out.end()) out.push_back(degs[i]);
  }
  return out;
}

}  // namespace strandlab
