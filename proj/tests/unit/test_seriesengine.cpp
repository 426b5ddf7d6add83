#include "test_util.hpp"
#include "zetaforge/elementary.hpp"
#include "zetaforge/reference.hpp"
#include "zetaforge/seriesengine.hpp"

using namespace zetaforge;
using testutil::close;
using testutil::q;

namespace {

const Params p21(Rational(2), Rational(1));
const Params p31(Rational(3), Rational(1));
const Params p32(Rational(3), Rational(2));
const Params p11(Rational(1), Rational(1));

const EvalSpec spec128(128);

BigFloat real(const Rational& x, long prec = 160) { return BigFloat(x, prec); }

}  // namespace

TEST_SUITE("seriesengine") {

TEST_CASE("EvalSpec") {
  const EvalSpec s(128);
  CHECK(s.working_precision() == 160);
  CHECK(s.tolerance() == BigFloat::pow2(-136, 160));
  CHECK_THROWS_AS(EvalSpec(128, 0), DomainError);
  CHECK_THROWS_AS(EvalSpec(4), DomainError);
  EvalSpec bad(128);
  bad.tail_tolerance = BigFloat(-1L, 64);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("geometric transform examples") {
  const long wp = spec128.working_precision();
  const auto leibniz = geometric_transform(1, p21, real(Rational(-1)), spec128);
  CHECK(leibniz.converged);
  CHECK(leibniz.terms_used >= 9);
  CHECK(close(leibniz.value, pi(wp) / 4L - 1L, 38));
  const auto eta = geometric_transform(2, p11, real(Rational(-1)), spec128);
  CHECK(close(eta.value, pi(wp).square() / 12L - 1L, 38));
  for (long k = 1; k <= 3; ++k) CHECK(geometric_transform(k, p32, real(Rational(0)), spec128).value.is_zero());
}

TEST_CASE("geometric transform domain and truncation") {
  CHECK_THROWS_AS(geometric_transform(1, p21, real(Rational(1)), spec128), DomainError);
  CHECK_THROWS_AS(geometric_transform(1, p21, real(Rational(3, 2)), spec128), DomainError);
  CHECK_THROWS_AS(geometric_transform(0, p21, real(Rational(1, 3)), spec128), DomainError);
  // |z/(1-z)| = 1 at z = 1/2: the terms do not decay
  try {
    (void)geometric_transform(2, p21, real(Rational(1, 2)), EvalSpec(128, 300));
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.terms_used() == 300);
    CHECK(e.last_term() > BigFloat::from_double(0.1, 64));
  }
}

TEST_CASE("term ratio at z = -1 tends to one half") {
  const long wp = spec128.working_precision();
  for (const Params& p : {p21, p31, p32}) {
    for (long k = 1; k <= 4; ++k) {
      const StarTable<Rational> t(p);
      const BigFloat half = BigFloat(Rational(1, 2), wp);
      BigFloat prev = (BigFloat(t.scaled(k + 2, 20), wp) * half.pow(21)).abs();
      for (long j = 21; j <= 80; ++j) {
        const BigFloat cur = (BigFloat(t.scaled(k + 2, j), wp) * half.pow(j + 1)).abs();
        CHECK(cur / prev <= BigFloat::from_double(0.6, wp));
        prev = cur;
      }
    }
  }
}

TEST_CASE("geometric transform matches direct partial sums") {
  const std::vector<Rational> zs{Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3)};
  for (const Params& p : {p21, p31, p32}) {
    for (const Rational& zq : zs) {
      if (zq == Rational(1, 2)) continue;  // outside the convergence region of the transform
      for (long k = 1; k <= 5; ++k) {
        const auto r = geometric_transform(k, p, real(zq), spec128);
        BigFloat direct;
        if (zq == Rational(-1)) {
          direct = cvz_alternating([&](long n, long wp) { return BigFloat(p.at(n + 1).pow(-k), wp); }, 160);
          direct = -direct;
        } else {
          direct = lerch_phi_direct<Rational>(real(zq), k, p, 400) - real(p.beta.pow(-k));
        }
        CAPTURE(k);
        CAPTURE(zq.str());
        CHECK((r.value - direct).abs() < BigFloat::pow2(-120, 160));
      }
    }
  }
}

TEST_CASE("complex geometric transform") {
  const ComplexParams p(ComplexRational(1), ComplexRational::i());
  const BigComplex z(ComplexRational(Rational(-1, 3), Rational(1, 4)), 160);
  const auto r = geometric_transform(2, p, z, spec128);
  const BigComplex direct = lerch_phi_direct<ComplexRational>(z, 2, p, 300) - BigComplex(p.beta.pow(-2), 160);
  CHECK(close(r.value, direct, 38));
}

TEST_CASE("exponential transform") {
  const long wp = spec128.working_precision();
  const BigFloat one(1L, wp);
  const auto e2 = exponential_transform(1, p11, one, one, spec128);
  CHECK(close(e2.value, exp(one) - 2L, 38));
  CHECK(exponential_transform(2, p21, one, BigFloat(0L, wp), spec128).value.is_zero());
  const auto r = exponential_transform(2, p21, one, one, spec128);
  BigFloat direct(0L, wp);
  BigFloat fact(1L, wp);
  for (long n = 1; n <= 60; ++n) {
    fact *= n;
    direct += 1L / (fact * BigFloat(p21.at(n).pow(2), wp));
  }
  CHECK(close(r.value, direct, 38));
  const BigFloat rr = BigFloat::from_double(1.5, wp);
  const BigFloat zz = BigFloat::from_double(-0.75, wp);
  BigFloat direct2(0L, wp);
  BigFloat pw(1L, wp);
  fact = BigFloat(1L, wp);
  for (long n = 1; n <= 80; ++n) {
    fact *= n;
    pw *= rr * zz;
    direct2 += pw / (fact * BigFloat(p32.at(n).pow(3), wp));
  }
  CHECK(close(exponential_transform(3, p32, rr, zz, spec128).value, direct2, 38));
}

TEST_CASE("lerch phi") {
  const long wp = spec128.working_precision();
  CHECK(lerch_phi<Rational>(real(Rational(0)), 3, p32, spec128).value == BigFloat(Rational(1, 8), wp));
  CHECK(close(lerch_phi<Rational>(real(Rational(-1)), 2, p21, spec128).value,
              testutil::bf("0.91596559417721901505460351493238411077414937428167213"), 37));
  CHECK(close(lerch_phi<Rational>(real(Rational(-1)), 3, p21, spec128).value, pi(wp).pow(3) / 32L, 38));
  CHECK_THROWS_AS(lerch_phi<Rational>(real(Rational(1, 3)), 2, Params(Rational(1), Rational(0)), spec128),
                  DomainError);
}

TEST_CASE("lerch phi direct") {
  CHECK(lerch_phi_direct(Rational(-1), 1, p21, 3) == q("76/105"));
  CHECK(lerch_phi_direct(Rational(0), 4, p32, 9) == Rational(1, 16));
  const BigFloat direct = lerch_phi_direct<Rational>(real(Rational(1, 3)), 2, p31, 200);
  CHECK(close(lerch_phi<Rational>(real(Rational(1, 3)), 2, p31, spec128).value, direct, 38));
}

TEST_CASE("lerch phi through rtilde") {
  for (const Params& p : {p21, p31, p32}) {
    for (long s = 1; s <= 4; ++s) {
      for (const Rational& z : {Rational(-1), Rational(-1, 2), Rational(1, 3)}) {
        const auto a = lerch_phi<Rational>(real(z), s, p, spec128);
        const auto b = lerch_phi_rtilde<Rational>(real(z), s, p, spec128);
        CHECK(close(a.value, b.value, 37));
      }
    }
  }
}

TEST_CASE("derivative-weighted transform") {
  const long wp = spec128.working_precision();
  const auto euler = derivative_weighted_transform(1, p21, real(Rational(-1)), harmonic_ogf_provider(), spec128);
  CHECK(close(euler.value, catalan(wp) - pi(wp) * ln2(wp) / 2L, 37));
  for (const Rational& z : {Rational(-1), Rational(-1, 3), Rational(1, 3)}) {
    const auto g = derivative_weighted_transform(2, p32, real(z), geometric_provider(), spec128);
    const auto h = geometric_transform(2, p32, real(z), spec128);
    CHECK(close(g.value, h.value, 38));
  }
}

TEST_CASE("harmonic OGF derivatives") {
  const long wp = 200;
  CHECK(harmonic_ogf_derivative(0, BigFloat(0L, wp)).is_zero());
  CHECK(harmonic_ogf_derivative(1, BigFloat(0L, wp)) == BigFloat(1L, wp));
  const BigFloat expected = (BigFloat(Rational(3, 2), wp) - ln2(wp)) * 2L / 8L;
  CHECK(close(harmonic_ogf_derivative(2, BigFloat(-1L, wp)), expected, 55));
  CHECK_THROWS_AS(harmonic_ogf_derivative(1, BigFloat(1L, wp)), DomainError);
  // Taylor series of -log(1-w)/(1-w) = sum H_n w^n, differentiated termwise
  for (long j = 0; j <= 8; ++j) {
    CHECK(harmonic_ogf_derivative(j, BigFloat(0L, wp)) == BigFloat(factorial(j) * harmonic(j), wp));
    for (const Rational& zq : {Rational(1, 2), Rational(-1, 2)}) {
      const BigFloat z(zq, wp);
      BigFloat sum(0L, wp);
      for (long n = j; n <= 400; ++n) {
        const Rational c = harmonic(n) * factorial(n) / factorial(n - j);
        sum += BigFloat(c, wp) * z.pow(n - j);
      }
      CAPTURE(j);
      CHECK(close(harmonic_ogf_derivative(j, z), sum, 50));
    }
  }
}

TEST_CASE("zeta-even generating function") {
  const long wp = 200;
  const EvalSpec s(168);
  CHECK(zeta_even_gf_derivative(0, BigFloat(Rational(1, 4), wp), s).value.abs() < testutil::bf("1e-45"));
  const BigFloat at9 = -pi(wp) / (BigFloat(6L, wp) * sqrt(BigFloat(3L, wp)));
  CHECK(close(zeta_even_gf_derivative(0, BigFloat(Rational(1, 9), wp), s).value, at9, 45));
  for (const Rational& z : {Rational(1, 4), Rational(1, 9), Rational(1, 16)}) {
    const BigFloat zf(z, wp);
    CHECK(close(zeta_even_gf_derivative(0, zf, s).value, zeta_even_gf_closed(zf), 25));
  }
  // central difference at 1/4 with step 2^-20
  const BigFloat h = BigFloat::pow2(-20, wp);
  const BigFloat z0(Rational(1, 4), wp);
  const BigFloat fd = (zeta_even_gf_closed(z0 + h) - zeta_even_gf_closed(z0 - h)) / (h * 2L);
  CHECK(close(zeta_even_gf_derivative(1, z0, s).value, fd, 8));
  const BigFloat fd2 = (zeta_even_gf_derivative(1, z0 + h, s).value - zeta_even_gf_derivative(1, z0 - h, s).value) /
                       (h * 2L);
  CHECK(close(zeta_even_gf_derivative(2, z0, s).value, fd2, 8));
  const ZetaEvenGf gf(wp);
  CHECK(close(gf.zeta_even_minus_one(1), pi(wp).square() / 6L - 1L, 55));
  CHECK(close(gf.zeta_even_minus_one(2), pi(wp).pow(4) / 90L - 1L, 55));
}

TEST_CASE("truncated power series identities") {
  auto same = [](const auto& pr) { return pr.first == pr.second; };
  const auto power = truncated_identity_check(TruncatedKind::power, 2, 0, 1, p21, Rational(1));
  CHECK(power.first == q("8/15"));
  CHECK(same(power));
  const auto ogf = truncated_identity_check(TruncatedKind::harmonic_ogf, 3, 0, 1, p21, Rational(1, 2));
  Rational expected;
  for (long n = 1; n <= 3; ++n) expected += hz_number(n, 1, p21) / Rational(2).pow(n);
  CHECK(ogf.first == expected);
  CHECK(same(ogf));
  const auto dbl = truncated_identity_check(TruncatedKind::double_sum, 2, 0, 2, p32, Rational(1, 3),
                                            std::optional<Rational>(Rational(1, 2)));
  // n=1: (1/2)/25 * 1/3; n=2: ((1/2)/25 + (1/4)/64) * 1/9
  CHECK(dbl.first == Rational(1, 150) + (Rational(1, 50) + Rational(1, 256)) / Rational(9));
  CHECK(same(dbl));
  CHECK_THROWS_AS(truncated_identity_check(TruncatedKind::double_sum, 2, 0, 2, p32, Rational(1, 3)), DomainError);

  testutil::RationalSampler rs(17);
  const TruncatedKind kinds[] = {TruncatedKind::power, TruncatedKind::harmonic_ogf, TruncatedKind::harmonic_egf,
                                 TruncatedKind::double_sum};
  for (TruncatedKind kind : kinds) {
    for (long u = 1; u <= 12; u += (u < 4 ? 1 : 4)) {
      const Rational z = rs.next_nonzero();
      const Rational t = rs.next_nonzero();
      for (const Params& p : {p21, p32}) {
        for (long u0 : {0L, 2L}) CHECK(same(truncated_identity_check(kind, u, u0, 2, p, z, std::optional<Rational>(t))));
      }
    }
  }
}

TEST_CASE("reverse second-kind transform") {
  CHECK(reverse_s2_transform(0, Rational(1, 2), p21) == Rational(2));
  CHECK(reverse_s2_transform(1, Rational(1, 2), Params(Rational(1), Rational(0))) == Rational(2));
  CHECK(reverse_s2_transform(3, Rational(1, 3), Params(Rational(1), Rational(0))) == q("33/8"));
  CHECK_THROWS_AS(reverse_s2_transform(2, Rational(1), p21), DomainError);
  const BigFloat z(Rational(-2, 5), 160);
  for (long k = 0; k <= 5; ++k) {
    BigFloat direct(0L, 160);
    for (long n = 0; n <= 400; ++n) direct += BigFloat(p31.at(n).pow(k), 160) * z.pow(n);
    CHECK(close(reverse_s2_transform<Rational>(k, z, p31, spec128), direct, 38));
    CHECK(close(reverse_s2_transform<Rational>(k, z, p31, spec128),
                BigFloat(reverse_s2_transform(k, Rational(-2, 5), p31), 160), 40));
  }
  CHECK_THROWS_AS(reverse_s2_transform<Rational>(1, BigFloat(2L, 160), p31, spec128), DomainError);
}

TEST_CASE("reverse second-kind finite sums") {
  const auto ex = reverse_s2_finite(1, 2, Rational(1, 2), p21);
  CHECK(ex.first == q("15/4"));
  CHECK(ex.second == q("15/4"));
  CHECK(reverse_s2_finite(0, 5, Rational(2, 3), p32).second ==
        (Rational(1) - Rational(2, 3).pow(6)) / (Rational(1) - Rational(2, 3)));
  const auto z2 = reverse_s2_finite(2, 3, Rational(2), p31);
  CHECK(z2.first == z2.second);
  for (long k = 0; k <= 4; ++k) {
    for (long n = 0; n <= 10; ++n) {
      for (const Rational& z : {Rational(1, 2), Rational(2), Rational(-3)}) {
        const auto pr = reverse_s2_finite(k, n, z, p21);
        CHECK(pr.first == pr.second);
      }
    }
  }
}

TEST_CASE("harmonic numbers from the Lerch generating function") {
  using S = FormalSeries<Rational>;
  const long order = 10;
  for (const Params& p : {p21, p31, p32}) {
    for (long s = 1; s <= 3; ++s) {
      std::vector<Rational> c(order + 1);
      for (long k = 1; k <= order; ++k) c[k] = p.at(k).pow(-s);
      const S phi_minus_head(c, order);
      const S gf = phi_minus_head * S::geometric(Rational(1), order);
      for (long n = 0; n <= order; ++n) CHECK(gf[n] == hz_number(n, s, p));
    }
  }
}

}  // TEST_SUITE
