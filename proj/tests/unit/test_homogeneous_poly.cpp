#include "doctest.h"

#include <random>

#include "support/oracles.hpp"
#include "zpair/error.hpp"
#include "zpair/homogeneous_poly.hpp"

using namespace zpair;

namespace {

const HomPoly kConic(2, {1, -2, -2, 1, -2, 1});

HomPoly random_form(std::mt19937& rng, unsigned degree) {
  QVector v(monomial_count(degree));
  for (auto& x : v) x = oracle::random_rational(rng, 4, 2);
  return HomPoly(degree, v);
}

}  // namespace

TEST_CASE("monomial order is graded lex with x > y > z") {
  const auto m = monomials(2);
  REQUIRE(m.size() == 6);
  CHECK(m[0] == Monomial{2, 0, 0});
  CHECK(m[1] == Monomial{1, 1, 0});
  CHECK(m[2] == Monomial{1, 0, 1});
  CHECK(m[3] == Monomial{0, 2, 0});
  CHECK(m[4] == Monomial{0, 1, 1});
  CHECK(m[5] == Monomial{0, 0, 2});
  CHECK(monomial_count(3) == 10);
  CHECK(monomial_count(0) == 1);
  for (unsigned n = 0; n < 5; ++n) {
    const auto ms = monomials(n);
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(monomial_index(ms[i]) == i);
  }
}

TEST_CASE("projective points are canonical") {
  const ProjPoint p(Rational(1, 2), Rational(-1, 3), 0);
  CHECK(p.x() == 3);
  CHECK(p.y() == -2);
  CHECK(p.z() == 0);
  CHECK(ProjPoint(0, -5, 1) == ProjPoint(0, 5, -1));
  CHECK(ProjPoint(0, 10, -2) == ProjPoint(0, 5, -1));
  CHECK(ProjPoint(2, 4, 6).to_string() == "[1:2:3]");
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), InputError);
  const ProjPoint q(p.x(), p.y(), p.z());
  CHECK(q == p);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(kConic, ProjPoint(0, 1, 1)) == 0);
  CHECK(evaluate(HomPoly::variable(0), ProjPoint(0, 1, 1)) == 0);
  CHECK(evaluate(kConic, ProjPoint(1, 0, 0)) == 1);
  CHECK(evaluate(HomPoly::linear(1, 1, -5), ProjPoint(4, 1, 1)) == 0);
}

TEST_CASE("multiply") {
  const HomPoly x = HomPoly::variable(0);
  const HomPoly y = HomPoly::variable(1);
  CHECK(multiply(x, HomPoly::constant(1)) == x);
  CHECK(multiply(x, y) == HomPoly::monomial({1, 1, 0}));
  const HomPoly t = multiply(multiply(x, y), HomPoly::linear(1, 1, -5));
  CHECK(t.degree() == 3);
  CHECK(t.to_string() == "x^2*y + x*y^2 - 5*x*y*z");
  CHECK(t.coefficient({2, 1, 0}) == 1);
  CHECK(t.coefficient({1, 2, 0}) == 1);
  CHECK(t.coefficient({1, 1, 1}) == -5);
  CHECK(t.coefficient({3, 0, 0}) == 0);
}

TEST_CASE("to_string") {
  CHECK(HomPoly(1).to_string() == "0");
  CHECK(HomPoly::constant(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(HomPoly::linear(1, 0, 0).to_string() == "x");
  CHECK(HomPoly::linear(-1, 2, 0).to_string() == "-x + 2*y");
  CHECK(kConic.to_string() == "x^2 - 2*x*y - 2*x*z + y^2 - 2*y*z + z^2");
}

TEST_CASE("monomial_row") {
  CHECK(monomial_row(1, ProjPoint(1, 2, 3)) == QVector{1, 2, 3});
  const auto r = monomial_row(3, ProjPoint(1, 0, 0));
  CHECK(r[0] == 1);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] == 0);

  // Canonical representative of [0:-5:1] is (0, 5, -1).
  const auto ms = monomials(3);
  const auto row = monomial_row(3, ProjPoint(0, -5, 1));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Rational expected = 0;
    if (ms[i].x == 0) {
      mpz_class v;
      mpz_pow_ui(v.get_mpz_t(), mpz_class(5).get_mpz_t(), ms[i].y);
      expected = Rational(v) * (ms[i].z % 2 ? -1 : 1);
    }
    CHECK(row[i] == expected);
  }
}

TEST_CASE("multiplication_image") {
  const HomPoly x = HomPoly::variable(0);
  const auto i1 = multiplication_image(x, 1);
  REQUIRE(i1.size() == 1);
  CHECK(i1.vectors[0] == x.coefficients());
  CHECK(multiplication_image(x, 2).size() == 3);

  const HomPoly l = HomPoly::linear(1, 1, -5);
  const auto i3 = multiplication_image(l, 3);
  CHECK(i3.size() == 6);
  for (const auto& v : i3.vectors) CHECK(oracle::divides(l, HomPoly(3, v)));

  CHECK_THROWS_AS(multiplication_image(kConic, 1), DimensionError);
  CHECK_THROWS_AS(multiplication_image(HomPoly(1), 2), InputError);
}

TEST_CASE("coefficient vector length is checked") {
  CHECK_THROWS(HomPoly(2, {1, 2, 3}));
}

TEST_CASE("primitive forms") {
  CHECK(HomPoly::linear(Rational(-1, 2), 1, 0).primitive() == HomPoly::linear(1, -2, 0));
  CHECK(HomPoly::linear(0, -3, 6).primitive() == HomPoly::linear(0, 1, -2));
}

TEST_CASE("random evaluation identities") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const HomPoly f = random_form(rng, 1 + trial % 3);
    const HomPoly g = random_form(rng, 1 + trial % 2);
    Rational a, b, c;
    do {
      a = oracle::random_rational(rng, 6, 3);
      b = oracle::random_rational(rng, 6, 3);
      c = oracle::random_rational(rng, 6, 3);
    } while (a == 0 && b == 0 && c == 0);
    const ProjPoint p(a, b, c);
    CHECK(evaluate(multiply(f, g), p) == evaluate(f, p) * evaluate(g, p));

    const auto row = monomial_row(f.degree(), p);
    Rational dot = 0;
    for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * f.coefficients()[i];
    CHECK(dot == evaluate(f, p));

    const auto img = multiplication_image(g, g.degree() + 1);
    CHECK(img.size() == monomial_count(1));
    if (evaluate(g, p) == 0) {
      for (const auto& v : img.vectors) CHECK(evaluate(HomPoly(g.degree() + 1, v), p) == 0);
    }
    for (const auto& v : img.vectors) CHECK(oracle::divides(g, HomPoly(g.degree() + 1, v)));

    const Rational s = oracle::random_rational(rng, 5, 4);
    if (s != 0) CHECK(ProjPoint(a * s, b * s, c * s) == p);
  }
}
