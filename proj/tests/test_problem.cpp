#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "strandlab/problem.hpp"
#include "strandlab/resolution.hpp"

using namespace strandlab;

namespace {

const Field kF = Field::prime(32003);

ProblemError::Kind error_kind(const std::string& text) {
  try {
    parse_problem(text, kF);
  } catch (const ProblemError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ProblemError::Kind::parse;
}

std::string field_of(const std::string& text) {
  try {
    parse_problem(text, kF);
  } catch (const ProblemError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_SUITE("problem") {
  TEST_CASE("degrees") {
    CHECK(parse_degree("3") == Multidegree{3});
    CHECK(parse_degree("(1,-2)") == Multidegree{1, -2});
    CHECK(parse_degree(" 1, 0 ") == Multidegree{1, 0});
    CHECK_THROWS(parse_degree(""));
    CHECK_THROWS(parse_degree("(1,a)"));
  }

  TEST_CASE("fields") {
    CHECK(parse_field("QQ") == Field::rationals());
    CHECK(parse_field("0") == Field::rationals());
    CHECK(parse_field("7") == Field::prime(7));
    CHECK_THROWS_AS(parse_field("x"), ProblemError);
    CHECK_THROWS_AS(parse_field("8"), ProblemError);
  }

  TEST_CASE("ideal files") {
    const Problem p = parse_problem(
        "# comment\n[grading]\nvariables = a b c\ndegrees = 1 1 2\n[module]\nideal = a, b^2, c\n"
        "[options]\ndegree = 0\nlength = 2\ncap = 5\n",
        kF);
    CHECK(p.ring->field() == kF);
    CHECK(p.ring->nvars() == 3);
    CHECK(p.presentation.rows() == 1);
    CHECK(p.presentation.col_degrees() == std::vector<Multidegree>{{1}, {2}, {2}});
    CHECK(*p.degree == Multidegree{0});
    CHECK(*p.length == 2);
    CHECK(*p.cap == 5);
  }

  TEST_CASE("the default field applies only without a field section") {
    const std::string body = "[grading]\ndegrees = 1 1\n[module]\nideal = x0\n";
    CHECK(parse_problem(body, Field::prime(5)).ring->field() == Field::prime(5));
    CHECK(parse_problem("[field]\ncharacteristic = 0\n" + body, Field::prime(5)).ring->field() == Field::rationals());
  }

  TEST_CASE("a theta is found when omitted") {
    const Problem p = parse_problem("[grading]\ndegrees = (1,0) (-3,1) (1,0) (0,1)\n[module]\nideal = x2\n", kF);
    const GradingSpec& g = p.ring->grading();
    for (const auto& d : g.var_degrees()) CHECK(g.theta_of(d) > 0);
  }

  TEST_CASE("matrix presentations infer column degrees") {
    const Problem p = parse_problem(
        "[grading]\ndegrees = 1 1 1\n[module]\nrows = 0 0\n[x0, x2]\n[-x1, 0]\n", kF);
    CHECK(p.presentation.col_degrees() == std::vector<Multidegree>{{1}, {1}});
    CHECK(error_kind("[grading]\ndegrees = 1 1\n[module]\nrows = 0\n[0]\n") == ProblemError::Kind::parse);
  }

  TEST_CASE("grading errors") {
    CHECK(error_kind("[grading]\ndegrees = 1 -1\n[module]\nideal = x0\n") == ProblemError::Kind::grading);
    CHECK(error_kind("[grading]\ndegrees = (1,0) 1\n[module]\nideal = x0\n") == ProblemError::Kind::grading);
    CHECK(error_kind("[grading]\ndegrees = 1 1\ntheta = -1\n[module]\nideal = x0\n") == ProblemError::Kind::grading);
    CHECK(error_kind("[grading]\ndegrees = 1 1\ntheta = (1,1)\n[module]\nideal = x0\n") == ProblemError::Kind::grading);
    CHECK(error_kind("[grading]\nvariables = a\ndegrees = 1 1\n[module]\nideal = a\n") == ProblemError::Kind::grading);
    CHECK(field_of("[grading]\ndegrees = 1 1\ntheta = -1\n[module]\nideal = x0\n") == "grading.theta");
  }

  TEST_CASE("parse errors name the field") {
    CHECK(error_kind("degrees = 1\n") == ProblemError::Kind::parse);
    CHECK(field_of("[grading]\ndegrees = 1\n") == "module");
    CHECK(field_of("[grading]\ndegrees = 1 1\n[module]\nideal = x0 +\n") == "module.ideal");
    CHECK(field_of("[grading]\ndegrees = 1 1\n[module]\nideal = x0 + x1^2\n") == "module.ideal");
    CHECK(field_of("[grading]\ndegrees = 1\n[module]\nideal = x0\n[options]\nlength = -1\n") == "options.length");
    CHECK(field_of("[grading]\ndegrees = 1\n[module]\nideal = x0\n[options]\nspeed = 2\n") == "options.speed");
    CHECK(field_of("[grading]\ndegrees = 1\n[grading]\n") == "grading");
    CHECK(field_of("[grading]\ndegrees = 1 1\n[module]\nrows = 0\n[x0, x1]\n[x1, x0]\n") == "module");
  }

  TEST_CASE("matrices round trip") {
    for (const auto& ex : fixture::small_corpus()) {
      CAPTURE(ex.name);
      const GradedComplex f = free_resolution(ex.module->presentation()).complex;
      for (std::size_t i = 1; i < f.size(); ++i) {
        const GradedMatrix& d = f.differential(i);
        CHECK(parse_matrix(*ex.ring, format_matrix(d)) == d);
      }
    }
  }

  TEST_CASE("problems round trip") {
    std::mt19937 rng(11);
    auto corpus = fixture::small_corpus();
    for (int t = 0; t < 5; ++t) corpus.push_back(fixture::random_monomial(rng));
    for (const auto& ex : corpus) {
      CAPTURE(ex.name);
      const std::string text = format_problem(*ex.ring, ex.module->presentation());
      const Problem p = parse_problem(text, Field::prime(2));
      CHECK(p.ring->field() == ex.ring->field());
      CHECK(p.ring->grading().var_degrees() == ex.ring->grading().var_degrees());
      CHECK(p.ring->grading().theta() == ex.ring->grading().theta());
      CHECK(p.ring->names() == ex.ring->names());
      CHECK(p.presentation == ex.module->presentation());
      CHECK(format_problem(*p.ring, p.presentation) == text);
    }
  }

  TEST_CASE("free modules print grouped twists") {
    GradedFreeModule f;
    CHECK(format_free_module(f) == "0");
    f.gen_degrees = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
    CHECK(format_free_module(f) == "S + S(-1,0)^2 + S(0,-1)");
  }
}
