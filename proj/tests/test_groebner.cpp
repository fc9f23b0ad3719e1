#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strandlab/groebner.hpp"

using namespace strandlab;

namespace {

GradedMatrix ideal_matrix(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::vector<Multidegree> cols;
  for (const auto& f : gens) cols.push_back(*f.degree());
  GradedMatrix m(&ring, {ring.grading().zero()}, cols);
  for (std::size_t c = 0; c < gens.size(); ++c) m.at(0, c) = gens[c];
  return m;
}

GradedMatrix twisted_cubic(const Ring& ring) {
  return ideal_matrix(ring, {ring.parse("x0*x2 - x1^2"), ring.parse("x1*x3 - x2^2"), ring.parse("x0*x3 - x1*x2")});
}

// sum_k s_k g_k, as a vector in the ambient free module.
FreeVector evaluate(const ModuleOrder& ord, const FreeVector& s, const std::vector<FreeVector>& g) {
  FreeVector out;
  for (const auto& t : s.terms) add_multiple(ord, out, g[t.comp], t.mono, t.coeff);
  return out;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("twisted cubic") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(4));
    const PresentedModule m(twisted_cubic(*ring));
    CHECK(m.groebner().size() == 3);
    for (int d = 0; d < 7; ++d) CHECK(m.dim(Multidegree{d}) == static_cast<std::size_t>(3 * d + 1));
    std::vector<Polynomial> gens;
    for (std::size_t c = 0; c < 3; ++c) gens.push_back(m.presentation().at(0, c));
    CHECK(krull_dimension(*ring, gens) == 2);
  }

  TEST_CASE("Hilbert function matches linear algebra on random modules") {
    std::mt19937 rng(2024);
    const std::vector<GradingSpec> gradings = {
        GradingSpec::standard(3), GradingSpec::weighted({1, 1, 2}),
        GradingSpec(2, {Multidegree{1, 0}, Multidegree{1, 0}, Multidegree{0, 1}, Multidegree{-1, 1}}, {1, 2})};
    for (const auto& g : gradings)
      for (int trial = 0; trial < 6; ++trial) {
        auto ring = Ring::make(trial % 2 ? Field::rationals() : Field::prime(32003), g);
        const std::size_t rows = 1 + trial % 2;
        std::vector<Multidegree> row_deg, col_deg;
        for (std::size_t r = 0; r < rows; ++r) row_deg.push_back(r ? g.var_degree(0) : g.zero());
        for (int c = 0; c < 3 + trial % 2; ++c)
          col_deg.push_back(g.var_degree(static_cast<std::size_t>(c) % g.nvars()) + g.var_degree(0) +
                            g.var_degree(static_cast<std::size_t>(trial) % g.nvars()));
        GradedMatrix a(ring.get(), row_deg, col_deg);
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < col_deg.size(); ++c)
            a.at(r, c) = oracle::random_form(*ring, col_deg[c] - row_deg[r], rng, 1);
        const PresentedModule m(a);
        for (const auto& b : degrees_above(g.zero(), 6, g)) CHECK(m.dim(b) == oracle::coker_dim(a, b));
      }
  }

  TEST_CASE("Schreyer syzygies are syzygies") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(4));
    const PresentedModule m(twisted_cubic(*ring));
    const auto& g = m.groebner();
    const ModuleOrder next = m.order().induced(leads(g));
    const auto syz = schreyer_syzygies(m.order(), g, next);
    CHECK(syz.size() == 2);
    for (const auto& s : syz) CHECK(evaluate(m.order(), s, g).is_zero());
  }

  TEST_CASE("Krull dimension") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(3));
    CHECK(krull_dimension(*ring, {ring->parse("x0*x1")}) == 2);
    CHECK(krull_dimension(*ring, {ring->parse("x0 - 1"), ring->parse("x1^2 + x2")}) == 1);
    CHECK(krull_dimension(*ring, {ring->parse("x0 - 1"), ring->parse("x0")}) == -1);
    CHECK(krull_dimension(*ring, {}) == 3);
  }

  TEST_CASE("multiplication maps compose") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(4));
    const PresentedModule m(twisted_cubic(*ring));
    const Multidegree b{1};
    const Matrix ab = m.multiplication_map(1, Multidegree{2}) * m.multiplication_map(0, b);
    const Matrix ba = m.multiplication_map(0, Multidegree{2}) * m.multiplication_map(1, b);
    CHECK(ab == ba);
    CHECK(m.multiplication_map(Monomial::variable(0) * Monomial::variable(1), b) == ab);
  }

  TEST_CASE("minimal effective degrees") {
    GradingSpec g(2, {Multidegree{1, 0}, Multidegree{0, 1}}, {1, 1});
    auto ring = Ring::make(Field::prime(32003), g);
    GradedMatrix a(ring.get(), {Multidegree{0, 0}, Multidegree{1, 0}, Multidegree{0, 1}}, {Multidegree{0, 0}});
    a.at(0, 0) = ring->one();
    const PresentedModule m(a);
    const auto mins = m.minimal_effective_degrees();
    CHECK(mins == std::vector<Multidegree>{Multidegree{1, 0}, Multidegree{0, 1}});
  }
}
