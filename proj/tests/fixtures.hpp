#pragma once

// Example rings and modules shared by the test suites.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "strandlab/groebner.hpp"

namespace fixture {

using namespace strandlab;

inline GradedMatrix ideal_matrix(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  std::vector<Multidegree> cols;
  for (const auto& s : gens) {
    ps.push_back(ring.parse(s));
    cols.push_back(*ps.back().degree());
  }
  GradedMatrix m(&ring, {ring.grading().zero()}, cols);
  for (std::size_t c = 0; c < ps.size(); ++c) m.at(0, c) = ps[c];
  return m;
}

struct Example {
  std::string name;
  std::shared_ptr<const Ring> ring;
  std::unique_ptr<PresentedModule> module;
  Multidegree a;  // minimal effective degree used for strands
};

inline Example make(std::string name, std::shared_ptr<const Ring> ring, GradedMatrix pres, Multidegree a) {
  Example e{std::move(name), std::move(ring), nullptr, std::move(a)};
  e.module = std::make_unique<PresentedModule>(std::move(pres));
  return e;
}

// S = k[x0,x1,x2] with degrees 1, 1, 2 and M = S/(x0, x1^2, x2).
inline Example maximal(Field f = Field::prime(32003)) {
  auto ring = Ring::make(f, GradingSpec::weighted({1, 1, 2}));
  auto pres = ideal_matrix(*ring, {"x0", "x1^2", "x2"});
  return make("maximal", ring, std::move(pres), {0});
}

// Cox ring of the Hirzebruch surface of type 3 and M = S/(x3 - x0^3 x1, x2).
inline std::shared_ptr<const Ring> hirzebruch_ring(Field f = Field::prime(32003)) {
  GradingSpec g(2, {{1, 0}, {-3, 1}, {1, 0}, {0, 1}}, {1, 4});
  return Ring::make(f, g);
}

inline Example hirzebruch(Field f = Field::prime(32003)) {
  auto ring = hirzebruch_ring(f);
  auto pres = ideal_matrix(*ring, {"x3 - x0^3*x1", "x2"});
  return make("hirzebruch", ring, std::move(pres), {0, 0});
}

// The residue field over a standard graded ring in n variables.
inline Example residue_field(std::size_t n, Field f = Field::prime(32003)) {
  auto ring = Ring::make(f, GradingSpec::standard(n));
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  auto pres = ideal_matrix(*ring, vars);
  return make("k" + std::to_string(n), ring, std::move(pres), {0});
}

// M = S/(x) + S(-1)/(x) over k[x].
inline Example two_degrees(Field f = Field::prime(32003)) {
  auto ring = Ring::make(f, GradingSpec::standard(1));
  GradedMatrix pres(ring.get(), {{0}, {1}}, {{1}, {2}});
  pres.at(0, 0) = ring->var(0);
  pres.at(1, 1) = ring->var(0);
  return make("two_degrees", ring, std::move(pres), {0});
}


// Quotient by a random monomial ideal in three variables of weights 1 or 2,
// with generators of theta-degree at most max_theta.
inline Example random_monomial(std::mt19937& rng, int max_theta = 6, Field f = Field::prime(32003)) {
  std::uniform_int_distribution<int> w(1, 2), e(0, 3), count(2, 4);
  const std::vector<int> weights{w(rng), w(rng), w(rng)};
  auto ring = Ring::make(f, GradingSpec::weighted(weights));
  std::vector<std::string> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    std::string s;
    int theta = 0;
    for (int i = 0; i < 3; ++i) {
      const int p = e(rng);
      theta += p * weights[static_cast<std::size_t>(i)];
      if (p) s += (s.empty() ? "" : "*") + ("x" + std::to_string(i)) + (p > 1 ? "^" + std::to_string(p) : "");
    }
    if (s.empty() || theta > max_theta) continue;
    gens.push_back(s);
  }
  auto pres = ideal_matrix(*ring, gens);
  std::string name = "monomial w=";
  for (int x : weights) name += std::to_string(x);
  for (const auto& s : gens) name += " " + s;
  return make(name, ring, std::move(pres), {0});
}

// The examples from the paper that are cheap enough for exhaustive checks.
inline std::vector<Example> small_corpus() {
  std::vector<Example> v;
  v.push_back(maximal());
  v.push_back(hirzebruch());
  v.push_back(residue_field(3));
  v.push_back(two_degrees());
  return v;
}

}  // namespace fixture
