#include <doctest.h>

#include "virmod/laurent.hpp"
#include "virmod/rng.hpp"
#include "virmod/unipoly.hpp"

using namespace virmod;

TEST_CASE("binomial values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(30, 15) == Rat("155117520"));
}

TEST_CASE("rational parse and format") {
  CHECK(rat_parse("3/4") == rat_of(3, 4));
  CHECK(rat_parse("-6/8") == rat_of(-3, 4));
  CHECK(rat_str(rat_of(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse("abc"), ParseError);
}

TEST_CASE("int_pow handles negative bases") {
  CHECK(int_pow(-2, 3) == -8);
  CHECK(int_pow(-2, 0) == 1);
  CHECK(int_pow(0, 5) == 0);
}

TEST_CASE("laurent multiplication") {
  LaurentPoly one = LaurentPoly::constant(Rat(1));
  LaurentPoly t = LaurentPoly::term(Rat(1), 1);
  LaurentPoly ti = LaurentPoly::term(Rat(1), -1);

  CHECK((one + t) * (one - t) == one - t * t);
  CHECK(LaurentPoly::term(Rat(1), -3) * LaurentPoly::term(Rat(1), 5) ==
        LaurentPoly::term(Rat(1), 2));
  CHECK((LaurentPoly::constant(Rat(2)) + ti) * LaurentPoly() == LaurentPoly());
}

TEST_CASE("laurent degree additivity") {
  SampleRng rng(42);
  for (int k = 0; k < 50; ++k) {
    LaurentPoly a, b;
    for (int i = 0; i < 3; ++i) {
      a.add_term(rng.int_in(-6, 6), rng.rat());
      b.add_term(rng.int_in(-6, 6), rng.rat());
    }
    if (a.is_zero() || b.is_zero()) continue;
    LaurentPoly p = a * b;
    REQUIRE(!p.is_zero());  // no zero divisors over a field
    CHECK(p.min_exp() == a.min_exp() + b.min_exp());
    CHECK(p.max_exp() == a.max_exp() + b.max_exp());
  }
}

TEST_CASE("poly_shift examples") {
  UniPoly x = UniPoly::x();
  CHECK(poly_shift(x * x, Rat(1)) ==
        x * x - x * Rat(2) + UniPoly::constant(Rat(1)));
  CHECK(poly_shift(x, Rat(2)) == x - UniPoly::constant(Rat(2)));
  SampleRng rng(7);
  UniPoly f = rng.unipoly(5);
  CHECK(poly_shift(f, Rat(0)) == f);
}

TEST_CASE("poly_shift composes additively") {
  SampleRng rng(11);
  for (int k = 0; k < 30; ++k) {
    UniPoly f = rng.unipoly(5);
    Rat a = rng.rat(), b = rng.rat();
    CHECK(poly_shift(poly_shift(f, a), b) == poly_shift(f, a + b));
  }
}

TEST_CASE("ring axioms on random samples") {
  SampleRng rng(3);
  for (int k = 0; k < 30; ++k) {
    UniPoly f = rng.unipoly(4), g = rng.unipoly(4), h = rng.unipoly(4);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);

    LaurentPoly a, b, c;
    for (int i = 0; i < 3; ++i) {
      a.add_term(rng.int_in(-5, 5), rng.rat());
      b.add_term(rng.int_in(-5, 5), rng.rat());
      c.add_term(rng.int_in(-5, 5), rng.rat());
    }
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("poly parse and print") {
  CHECK(poly_parse("x^2 - 2x + 1") ==
        UniPoly::x() * UniPoly::x() - UniPoly::x() * Rat(2) +
            UniPoly::constant(Rat(1)));
  CHECK(poly_parse("-3/2x^3 + 5").coeff(3) == rat_of(-3, 2));
  CHECK(poly_parse("7") == UniPoly::constant(Rat(7)));
  CHECK(poly_parse(poly_parse("x^4 - 1/3x^2 + 2").str()) ==
        poly_parse("x^4 - 1/3x^2 + 2"));
  CHECK_THROWS_AS(poly_parse(""), ParseError);
  CHECK_THROWS_AS(poly_parse("x +"), ParseError);
}
