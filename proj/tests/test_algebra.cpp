#include <random>
#include <utility>

#include "doctest.h"
#include "strandlab/field.hpp"
#include "strandlab/complex.hpp"
#include "strandlab/linalg.hpp"
#include "strandlab/sparse.hpp"
#include "strandlab/polynomial.hpp"

using namespace strandlab;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int density = 3) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> val(-4, 4), keep(0, density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m(i, j) = f.from_int(val(rng));
  return m;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime field arithmetic and symmetric printing") {
    const Field f = Field::prime(7);
    const Scalar a = f.from_int(5), b = f.from_int(4);
    CHECK((a + b) == f.from_int(2));
    CHECK((a * b) == f.from_int(6));
    CHECK((a * a.inverse()).is_one());
    CHECK(a.to_string() == "-2");
    CHECK(f.from_int(3).to_string() == "3");
  }

  TEST_CASE("rationals") {
    const Field q = Field::rationals();
    const Scalar h = q.from_rational(1, 2);
    CHECK((h + h).is_one());
    CHECK((q.from_int(3) / q.from_int(6)) == h);
    CHECK(h.to_string() == "1/2");
  }

  TEST_CASE("untyped zero adopts the field") {
    const Field f = Field::prime(5);
    Scalar z;
    z += f.from_int(3);
    CHECK(z == f.from_int(3));
  }

  TEST_CASE("parse") {
    CHECK(Field::parse("QQ") == Field::rationals());
    CHECK(Field::parse("32003") == Field::prime(32003));
    CHECK_THROWS(Field::parse("12"));
    CHECK_THROWS(Field::parse("abc"));
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("serial and parallel elimination agree") {
    std::mt19937 rng(7);
    for (const Field& f : {Field::prime(32003), Field::rationals()})
      for (int trial = 0; trial < 6; ++trial) {
        const Matrix a = random_matrix(f, 40 + trial * 7, 90, rng);
        const auto s = rref_serial(a), p = rref_parallel(a);
        CHECK(s.pivots == p.pivots);
        CHECK(s.reduced == p.reduced);
      }
  }

  TEST_CASE("kernel is annihilated and has the complementary dimension") {
    std::mt19937 rng(11);
    const Field f = Field::prime(101);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = random_matrix(f, 6 + trial % 4, 10, rng, 1);
      const Matrix k = kernel(a);
      CHECK((a * k).is_zero());
      CHECK(rank(a) + k.cols() == a.cols());
      CHECK(rank(k) == k.cols());
    }
  }

  TEST_CASE("solve finds a solution exactly when one exists") {
    std::mt19937 rng(3);
    const Field f = Field::rationals();
    const Matrix a = random_matrix(f, 5, 3, rng, 0);
    const Matrix x = random_matrix(f, 3, 2, rng, 0);
    auto sol = solve(a, a * x);
    REQUIRE(sol);
    CHECK(a * *sol == a * x);
    Matrix b(f, 5, 1);
    b(0, 0) = f.one();
    const Matrix z(f, 5, 3);
    CHECK_FALSE(solve(z, b));
  }

  TEST_CASE("sparse matrices agree with dense ones") {
    std::mt19937 rng(19);
    for (const Field& f : {Field::prime(32003), Field::prime(2), Field::rationals()})
      for (int trial = 0; trial < 8; ++trial) {
        CAPTURE(f.name());
        CAPTURE(trial);
        const Matrix a = random_matrix(f, 12 + trial, 15, rng, 2);
        const Matrix b = random_matrix(f, 15, 9, rng, 4);
        const Matrix c = random_matrix(f, 12 + trial, 15, rng, 1);
        const SparseMatrix sa(a), sb(b), sc(c);
        CHECK(sa.dense() == a);
        CHECK((sa * sb).dense() == a * b);
        CHECK((sa + sc).dense() == a + c);
        CHECK((sa - sc).dense() == a - c);
        CHECK((sa - sa).is_zero());
        CHECK(sa.transpose().dense() == a.transpose());
        CHECK(sa.hstack(sc).dense() == a.hstack(c));
        CHECK(sa.vstack(sc).dense() == a.vstack(c));
        CHECK(sa.at(3, 4) == a(3, 4));
        // Low-rank products exercise the reduction steps.
        const Matrix low = random_matrix(f, 20, 3 + trial % 4, rng, 1) * random_matrix(f, 3 + trial % 4, 25, rng, 1);
        CHECK(rank(SparseMatrix(low)) == rank(low));
        CHECK(rank(sa) == rank(a));
        CHECK(rank(sa * sb) == rank(a * b));
      }
  }

  TEST_CASE("sparse columns are normalized") {
    const Field f = Field::prime(7);
    SparseMatrix m(f, 4, 2);
    m.set_column(0, {{3, f.from_int(2)}, {1, f.one()}, {3, f.from_int(5)}});
    REQUIRE(m.column(0).size() == 1);
    CHECK(m.column(0)[0].first == 1);
    CHECK(m.nonzeros() == 1);
    CHECK(m == SparseMatrix(m.dense()));
    CHECK(rank(SparseMatrix::identity(f, 5)) == 5);
    CHECK(rank(SparseMatrix(f, 3, 4)) == 0);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("parse and format round trip") {
    auto ring = Ring::make(Field::rationals(), GradingSpec::standard(3));
    const Polynomial p = ring->parse("3*x0^2*x1 - x2^3 + 1/2*x0*x1*x2");
    CHECK(ring->parse(p.to_string()) == p);
    CHECK(p.is_homogeneous());
    CHECK(*p.degree() == Multidegree{3});
    CHECK(ring->parse("(x0 + x1)^2") == ring->parse("x0^2 + 2*x0*x1 + x1^2"));
    CHECK_THROWS(ring->parse("x0 +"));
    CHECK_THROWS(ring->parse("y7"));
  }

  TEST_CASE("multigraded degrees and linear forms") {
    GradingSpec g(2, {Multidegree{1, 0}, Multidegree{1, 0}, Multidegree{0, 1}, Multidegree{-1, 1}}, {1, 2});
    auto ring = Ring::make(Field::prime(32003), g);
    const Polynomial f = ring->parse("x0*x3 + x2");
    CHECK(*f.degree() == Multidegree{0, 1});
    CHECK_FALSE(is_linear_form(f));
    CHECK(is_linear_form(ring->parse("x2 - 5*x3")));
    CHECK_THROWS(add_homogeneous(ring->var(0), ring->var(2)));
    CHECK(homogeneous_components(ring->parse("x0 + x2 + x3")).size() == 3);
  }

  TEST_CASE("graded matrices ignore stored zeros") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::standard(2));
    const std::vector<Multidegree> r{{0}, {0}}, c{{1}, {1}};
    GradedMatrix a(ring.get(), r, c), b(ring.get(), r, c);
    a.at(0, 1) = ring->var(0);
    b.at(0, 1) = ring->var(0);
    b.at(1, 0);  // inserts a zero entry
    CHECK(a == b);
    CHECK(b == a);
    CHECK(std::as_const(a).at(1, 1).is_zero());
    b.at(1, 1) = ring->var(1);
    CHECK_FALSE(a == b);
    CHECK(a.transpose_dual().at(1, 0) == ring->var(0));
    GradedMatrix z(ring.get(), r, c);
    z.at(0, 0);
    CHECK(z.is_zero());
  }

  TEST_CASE("leading term is theta-largest, ties by total degree") {
    auto ring = Ring::make(Field::prime(32003), GradingSpec::weighted({1, 1, 2}));
    CHECK(ring->parse("x2^2 + x0^3").lead().mono == Monomial::variable(2) * Monomial::variable(2));
    CHECK(ring->parse("x0^2 + x2").lead().mono == Monomial::variable(0) * Monomial::variable(0));
    const Monomial x1 = Monomial::variable(1);
    CHECK(ring->parse("x0*x2 + x1^3").lead().mono == x1 * x1 * x1);
  }
}
