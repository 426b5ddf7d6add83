#include "test_util.hpp"
#include "zetaforge/formal_series.hpp"

using namespace zetaforge;
using S = FormalSeries<Rational>;

TEST_SUITE("formal_series") {

TEST_CASE("geometric and exponential") {
  const S g = S::geometric(Rational(2), 6);
  for (long n = 0; n <= 6; ++n) CHECK(g[n] == Rational(2).pow(n));
  CHECK(g[7].is_zero());
  const S e = S::exponential(Rational(1), 6);
  CHECK(e[4] == Rational(1, 24));
}

TEST_CASE("inverse and division") {
  const S one_minus = S::constant(Rational(1), 8) + S::monomial(Rational(-3), 1, 8);
  CHECK(one_minus.inverse() == S::geometric(Rational(3), 8));
  CHECK(one_minus * one_minus.inverse() == S::constant(Rational(1), 8));
  CHECK_THROWS_AS(S::monomial(Rational(1), 1, 4).inverse(), DomainError);
  CHECK(S::geometric(Rational(1), 5) / S::geometric(Rational(1), 5) == S::constant(Rational(1), 5));
}

TEST_CASE("mismatched orders truncate to the smaller") {
  const S a = S::geometric(Rational(1), 3);
  const S b = S::geometric(Rational(1), 7);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a * b)[3] == Rational(4));
}

TEST_CASE("log and exp are inverse") {
  const S x = S::monomial(Rational(1), 1, 10);
  const S f = x * Rational(1, 3) + x.pow(2) * Rational(-2, 5) + x.pow(5);
  CHECK(f.exp().log() == f);
  const S u = S::constant(Rational(1), 10) + f;
  CHECK(u.log().exp() == u);
  CHECK_THROWS_AS(S::constant(Rational(2), 3).log(), DomainError);
  CHECK_THROWS_AS(S::constant(Rational(1), 3).exp(), DomainError);
}

TEST_CASE("log(1 - w) coefficients") {
  const S one_minus = S::constant(Rational(1), 8) + S::monomial(Rational(-1), 1, 8);
  const S l = one_minus.log();
  CHECK(l[0].is_zero());
  for (long n = 1; n <= 8; ++n) CHECK(l[n] == Rational(-1, n));
}

TEST_CASE("rational powers") {
  const S u = S::constant(Rational(1), 9) + S::monomial(Rational(4), 1, 9);
  const S root = u.pow(Rational(1, 2));
  CHECK(root * root == u);
  CHECK(u.pow(Rational(3)) == u.pow(3L));
  CHECK(u.pow(-2L) * u.pow(2L) == S::constant(Rational(1), 9));
}

TEST_CASE("derivative, integral, compose") {
  const S g = S::geometric(Rational(1), 6);
  const S d = g.derivative();
  for (long n = 0; n <= 5; ++n) CHECK(d[n] == Rational(n + 1));
  CHECK(g.integral().derivative() == g);
  const S w = S::monomial(Rational(1), 1, 6);
  const S inner = w * g;
  const S composed = S::exponential(Rational(1), 6).compose(inner);
  CHECK(composed == inner.exp());
  CHECK_THROWS_AS(g.compose(g), DomainError);
}

TEST_CASE("complex coefficients") {
  using C = FormalSeries<ComplexRational>;
  const C g = C::geometric(ComplexRational::i(), 4);
  CHECK(g[2] == ComplexRational(-1));
  CHECK(g * C::constant(ComplexRational(1), 4) == g);
  CHECK(g.inverse()[1] == -ComplexRational::i());
}

}  // TEST_SUITE
