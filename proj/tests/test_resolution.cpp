#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strandlab/resolution.hpp"

using namespace strandlab;

namespace {

GradedMatrix ideal_matrix(const Ring& ring, const std::vector<std::string>& gens) {
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

// Checks H_0 = M and H_i = 0 for i > 0 in every degree of theta <= cap.
void check_resolves(const GradedComplex& f, const GradedMatrix& pres, long cap) {
  const GradingSpec& g = pres.ring()->grading();
  std::vector<Multidegree> starts = pres.row_degrees();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (const auto& d : f.term(i).gen_degrees) starts.push_back(d);
  std::set<Multidegree> degs;
  for (const auto& s : starts)
    for (const auto& b : degrees_above(s, cap, g)) degs.insert(b);
  for (const auto& b : degs) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::size_t dim = oracle::free_basis(f.term(i).gen_degrees, b, g).size();
      const std::size_t rk_out = i == 0 ? 0 : rank(oracle::degree_matrix(f.differential(i), b));
      const std::size_t rk_in = i + 1 < f.size() ? rank(oracle::degree_matrix(f.differential(i + 1), b)) : 0;
      const std::size_t h = dim - rk_out - rk_in;
      if (i == 0)
        CHECK(h == oracle::coker_dim(pres, b));
      else
        CHECK(h == 0);
    }
  }
}

}  // namespace

TEST_SUITE("resolution") {
  TEST_CASE("twisted cubic: Betti numbers 1 3 2") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(4));
    const auto pres = ideal_matrix(*ring, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    const auto res = free_resolution(pres);
    const auto& f = res.complex;
    REQUIRE(f.size() == 3);
    CHECK(f.term(1).rank() == 3);
    CHECK(f.term(2).rank() == 2);
    CHECK(is_complex(f));
    CHECK(is_minimal(f));
    check_resolves(f, pres, 6);
  }

  TEST_CASE("residue field of k[x,y,z] is the Koszul complex") {
    auto ring = Ring::make(Field::rationals(), GradingSpec::standard(3));
    const auto res = free_resolution(ideal_matrix(*ring, {"x0", "x1", "x2"}));
    const BettiTable t = betti_table(res.complex);
    CHECK(t.at(0, Multidegree{0}) == 1);
    CHECK(t.at(1, Multidegree{1}) == 3);
    CHECK(t.at(2, Multidegree{2}) == 3);
    CHECK(t.at(3, Multidegree{3}) == 1);
    CHECK(is_strongly_linear(res.complex));
  }

  TEST_CASE("nonminimal presentation is minimized") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(2));
    GradedMatrix a(ring.get(), {Multidegree{0}, Multidegree{1}}, {Multidegree{1}, Multidegree{2}});
    a.at(0, 0) = ring->var(0);
    a.at(1, 0) = ring->constant(ring->field().from_int(-1));
    a.at(0, 1) = ring->parse("x1^2");
    const auto res = free_resolution(a);
    CHECK(res.complex.term(0).rank() == 1);
    CHECK(res.kept_generators == std::vector<std::size_t>{0});
    CHECK(is_minimal(res.complex));
    check_resolves(res.complex, a, 5);
  }

  TEST_CASE("random monomial and binomial ideals resolve exactly") {
    std::mt19937 rng(99);
    const std::vector<GradingSpec> gradings = {
        GradingSpec::standard(3), GradingSpec::weighted({1, 2, 3}),
        GradingSpec(2, {Multidegree{1, 0}, Multidegree{1, 0}, Multidegree{0, 1}, Multidegree{0, 1}}, {1, 1})};
    for (const auto& g : gradings)
      for (int trial = 0; trial < 4; ++trial) {
        auto ring = Ring::make(Field::prime(32003), g);
        std::vector<Multidegree> cols;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(g.nvars()) - 1);
        for (int c = 0; c < 3; ++c) {
          Multidegree d = g.var_degree(static_cast<std::size_t>(pick(rng)));
          d += g.var_degree(static_cast<std::size_t>(pick(rng)));
          cols.push_back(d);
        }
        GradedMatrix a(ring.get(), {g.zero()}, cols);
        for (std::size_t c = 0; c < cols.size(); ++c) a.at(0, c) = oracle::random_form(*ring, cols[c], rng, 1);
        const auto res = free_resolution(a);
        CHECK(is_complex(res.complex));
        CHECK(is_minimal(res.complex));
        check_resolves(res.complex, a, 7);
      }
  }

  TEST_CASE("chain map lifting between two resolutions") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(3));
    const auto pres = ideal_matrix(*ring, {"x0^2", "x0*x1", "x1^2"});
    const auto f = free_resolution(pres).complex;
    const auto s = schreyer_resolution(pres);
    GradedMatrix phi0(ring.get(), f.term(0).gen_degrees, s.term(0).gen_degrees);
    phi0.at(0, 0) = ring->one();
    const auto phi = lift_chain_map(s, f, phi0);
    REQUIRE(phi);
    for (std::size_t i = 1; i < s.size(); ++i)
      CHECK(f.differential(i) * (*phi)[i] == (*phi)[i - 1] * s.differential(i));
    const auto back = lift_chain_map(f, s, phi0);
    REQUIRE(back);
    CHECK(is_quasi_split(*back));
  }
}
