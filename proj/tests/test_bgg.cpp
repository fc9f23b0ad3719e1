#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "strand_checks.hpp"
#include "strandlab/bgg.hpp"
#include "strandlab/resolution.hpp"

using namespace strandlab;

namespace {

std::vector<std::size_t> ranks(const GradedComplex& c) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < c.size(); ++i) r.push_back(c.term(i).rank());
  return r;
}

std::multiset<Multidegree> degrees(const GradedComplex& c, std::size_t i) {
  const auto& v = c.term(i).gen_degrees;
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("bgg") {
  TEST_CASE("strand of the maximal example") {
    auto ex = fixture::maximal();
    const GradedComplex l = strongly_linear_strand(*ex.module, ex.a);
    CHECK(ranks(l) == std::vector<std::size_t>{1, 2, 1});
    CHECK(degrees(l, 1) == std::multiset<Multidegree>{{1}, {2}});
    CHECK(degrees(l, 2) == std::multiset<Multidegree>{{3}});
    CHECK(is_complex(l));
    CHECK(is_strongly_linear(l));
  }

  TEST_CASE("strand of the Hirzebruch example is x2") {
    auto ex = fixture::hirzebruch();
    const GradedComplex l = strongly_linear_strand(*ex.module, ex.a);
    REQUIRE(ranks(l) == std::vector<std::size_t>{1, 1});
    CHECK(degrees(l, 1) == std::multiset<Multidegree>{{1, 0}});
    const Polynomial e = l.differential(1).at(0, 0);
    CHECK((e == ex.ring->var(2) || e == -ex.ring->var(2)));
  }

  TEST_CASE("strand with generators in two degrees") {
    auto ex = fixture::two_degrees();
    const GradedComplex l = strongly_linear_strand(*ex.module, ex.a);
    REQUIRE(ranks(l) == std::vector<std::size_t>{1, 1});
    CHECK(degrees(l, 1) == std::multiset<Multidegree>{{1}});
    CHECK_THROWS_AS(strongly_linear_strand(*ex.module, {1}), NotMinimalDegree);
  }

  TEST_CASE("strand of the residue field is the Koszul complex") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto ex = fixture::residue_field(n);
      const GradedComplex l = strongly_linear_strand(*ex.module, ex.a);
      std::vector<std::size_t> binom{1};
      for (std::size_t i = 1; i <= n; ++i) binom.push_back(binom.back() * (n - i + 1) / i);
      CHECK(ranks(l) == binom);
      CHECK(is_complex(l));
      CHECK(betti_table(l) == betti_table(free_resolution(ex.module->presentation()).complex));
    }
  }

  TEST_CASE("strongly linear part of the Hirzebruch resolution") {
    auto ex = fixture::hirzebruch();
    const GradedComplex f = free_resolution(ex.module->presentation()).complex;
    const GradedComplex lp = strongly_linear_part(f, 8);
    REQUIRE(ranks(lp) == std::vector<std::size_t>{1, 2, 1});
    // The twists are those of F itself; only the entries x2, x3 survive.
    CHECK(degrees(lp, 1) == std::multiset<Multidegree>{{1, 0}, {0, 1}});
    CHECK(degrees(lp, 2) == std::multiset<Multidegree>{{1, 1}});
    const Ring& r = *ex.ring;
    std::set<std::string> first, second;
    for (std::size_t c = 0; c < 2; ++c) {
      first.insert(r.format(lp.differential(1).at(0, c)));
      second.insert(r.format(lp.differential(2).at(c, 0)));
    }
    CHECK(first == std::set<std::string>{"-x2", "x3"});
    CHECK(second == std::set<std::string>{"-x2", "-x3"});
    CHECK(is_complex(lp));
    CHECK(is_strongly_linear(lp));
  }

  TEST_CASE("perturbation reproduces the minimal resolution") {
    std::vector<fixture::Example> exs;
    exs.push_back(fixture::maximal());
    exs.push_back(fixture::hirzebruch());
    exs.push_back(fixture::residue_field(3));
    exs.push_back(fixture::two_degrees());
    for (const auto& ex : exs) {
      CAPTURE(ex.name);
      const Perturbation p = perturbation_resolution(*ex.module);
      const GradedComplex f = free_resolution(ex.module->presentation()).complex;
      CHECK(betti_table(p.complex) == betti_table(f));
      CHECK(is_complex(p.complex));
      CHECK(is_minimal(p.complex));
    }
  }
}

namespace {

long max_theta(const GradedComplex& f) {
  const GradingSpec& g = f.ring()->grading();
  long t = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (const auto& d : f.term(i).gen_degrees) t = std::max(t, g.theta_of(d));
  return t;
}

const checks::Report kCheck = [](bool ok, const std::string& what) { CHECK_MESSAGE(ok, what); };

}  // namespace

TEST_SUITE("bgg") {
  TEST_CASE("litmus for strong linearity") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::weighted({1, 2}));
    for (const auto& [entry, linear] : std::vector<std::pair<std::string, bool>>{{"x1", true}, {"x0^2", false}}) {
      GradedComplex c(ring.get());
      c.push_term(GradedFreeModule{{{0}}});
      GradedMatrix d(ring.get(), {{0}}, {{2}});
      d.at(0, 0) = ring->parse(entry);
      c.push_term(GradedFreeModule{{{2}}}, d);
      CHECK(is_strongly_linear(c) == linear);
    }
  }

  TEST_CASE("kernel module of free and trivial modules") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(3));
    const PresentedModule s(GradedMatrix(ring.get(), {{0}}, {}));
    const KernelModule ks = kernel_K(ModuleView(s), {0});
    CHECK(ks.module.total_dim() == 1);
    CHECK(ks.module.dim({{0}, 0}) == 1);
    CHECK_THROWS_AS(kernel_K(ModuleView(s), {-1}), std::invalid_argument);

    auto k = fixture::residue_field(3);
    const KernelModule kk = kernel_K(ModuleView(*k.module), {0});
    const EModule w = omega_E(ring->field(), ring->grading());
    CHECK(kk.module.degrees() == w.degrees());
    for (const auto& d : w.degrees()) CHECK(kk.module.dim(d) == w.dim(d));
    CHECK(kk.module.anticommutes());

    auto m = fixture::maximal();
    const KernelModule km = kernel_K(ModuleView(*m.module), {0});
    std::vector<std::size_t> by_j(3, 0);
    for (const auto& d : km.module.degrees()) by_j.at(static_cast<std::size_t>(d.j)) += km.module.dim(d);
    CHECK(by_j == std::vector<std::size_t>{1, 2, 1});
  }

  TEST_CASE("strands embed quasi-split and are maximal in degree 1") {
    for (const auto& ex : fixture::small_corpus()) {
      CAPTURE(ex.name);
      checks::strand_embedding(*ex.module, ex.a, kCheck);
    }
  }

  TEST_CASE("kernel module injects into the homology of R(M)") {
    for (const auto& ex : fixture::small_corpus()) {
      CAPTURE(ex.name);
      const ModuleView v(*ex.module);
      const KernelModule k = kernel_K(v, ex.a);
      const long cap = max_theta(free_resolution(ex.module->presentation()).complex) + 1;
      const RModule r = functor_R(v, cap);
      const Homology h = homology(r.dmod);
      for (const auto& [d, emb] : k.embedding) {
        if (ex.ring->grading().theta_of(d.a) > cap) continue;
        const auto& subs = k.subsets.at(d);
        Matrix in_r(ex.ring->field(), r.dmod.module().dim(d), emb.cols());
        for (std::size_t c = 0; c < emb.cols(); ++c)
          for (std::size_t s = 0; s < subs.size(); ++s)
            for (std::size_t q = 0; q < k.dim_Ma; ++q)
              in_r(r.position(d, 0, subs[s], q), c) += emb(s * k.dim_Ma + q, c);
        const DegreeSplit& sp = h.split.at(d);
        std::vector<std::size_t> hrows;
        for (std::size_t t = 0; t < sp.nh; ++t) hrows.push_back(sp.nb + t);
        CHECK(rank((sp.coords * in_r).rows_subset(hrows)) == emb.cols());
      }
    }
  }

  TEST_CASE("restriction of scalars and the annihilator submodule agree") {
    for (const auto& ex : fixture::small_corpus()) {
      CAPTURE(ex.name);
      checks::restriction_bound(*ex.module, ex.a, kCheck);
    }
  }

  TEST_CASE("perturbation: first order term, window check and higher corrections") {
    auto ex = fixture::hirzebruch();
    const Perturbation p = perturbation_resolution(*ex.module);
    REQUIRE(p.complex.size() == 3);
    const GradedComplex lh = [&] {
      const RModule r = functor_R(ModuleView(*ex.module), p.theta_cap);
      return functor_L(*ex.ring, homology(r.dmod).module).complex;
    }();
    for (std::size_t j = 1; j < 3; ++j) CHECK(p.first_order[j - 1] == lh.differential(j));
    CHECK(is_strongly_linear(lh));
    CHECK_FALSE(is_strongly_linear(p.complex));
    const Polynomial x0x1 = ex.ring->parse("x0^3*x1");
    bool found = false;
    for (std::size_t c = 0; c < 2; ++c)
      for (const auto& t : p.complex.differential(1).at(0, c).terms()) found |= t.mono == x0x1.lead().mono;
    CHECK(found);

    try {
      PerturbationOptions opt;
      opt.theta_cap = 3;
      (void)perturbation_resolution(*ex.module, opt);
      FAIL("expected WindowTooSmall");
    } catch (const WindowTooSmall& e) {
      CHECK(e.needed() == p.theta_cap);
      CHECK_FALSE(e.unreliable().empty());
    }

    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(2));
    const PresentedModule free(GradedMatrix(ring.get(), {{0}, {1}}, {}));
    const Perturbation pf = perturbation_resolution(free);
    CHECK(pf.complex.size() == 1);
    CHECK(pf.complex.term(0).rank() == 2);
  }

  TEST_CASE("perturbation matches free_resolution on random monomial ideals") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 10; ++t) {
      auto ex = fixture::random_monomial(rng);
      CAPTURE(ex.name);
      const Perturbation p = perturbation_resolution(*ex.module);
      const GradedComplex f = free_resolution(ex.module->presentation()).complex;
      CHECK(betti_table(p.complex) == betti_table(f));
      CHECK(is_complex(p.complex));
      CHECK(is_minimal(p.complex));
    }
  }
}
