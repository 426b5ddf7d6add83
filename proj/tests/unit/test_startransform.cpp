#include "table_fixtures.hpp"
#include "test_util.hpp"
#include "zetaforge/startransform.hpp"
#include "zetaforge/stirling1.hpp"

using namespace zetaforge;
using testutil::q;

namespace {

const Params p21(Rational(2), Rational(1));
const Params p31(Rational(3), Rational(1));
const Params p32(Rational(3), Rational(2));
const Params p10(Rational(1), Rational(0));

// Random rational parameters with alpha m + beta != 0 for m <= limit.
std::vector<Params> random_params(unsigned seed, int count, long limit = 12) {
  testutil::RationalSampler rs(seed);
  std::vector<Params> out;
  while (static_cast<int>(out.size()) < count) {
    Params p(rs.next_nonzero(), rs.next_nonzero());
    bool ok = true;
    for (long m = 0; m <= limit; ++m) ok = ok && !p.at(m).is_zero();
    if (ok) out.push_back(p);
  }
  return out;
}

template <std::size_t R, std::size_t C>
void check_table(const Params& p, const std::array<std::array<const char*, C>, R>& fixture) {
  const StarTable<Rational> table(p);
  for (long j = 0; j < static_cast<long>(R); ++j) {
    for (long k = 0; k < static_cast<long>(C); ++k) {
      Rational expected = q(fixture[j][k]);
      // The (2,1) fixture holds +7 at (j=2, k=0); the defining sum gives -7.
      if (p == p21 && j == 2 && k == 0) {
        CHECK(expected == Rational(7));
        expected = Rational(-7);
      }
      CAPTURE(j);
      CAPTURE(k);
      CHECK(table.normalized(k, j) == expected);
      const Rational direct = star_coeff(k, j, p) * factorial(j) * (j % 2 == 1 ? Rational(1) : Rational(-1));
      CHECK(direct == expected);
    }
  }
}

Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

TEST_SUITE("startransform") {

TEST_CASE("coefficient tables for (2,1), (3,1), (3,2)") {
  check_table(p21, fixtures::kStar21);
  check_table(p31, fixtures::kStar31);
  check_table(p32, fixtures::kStar32);
  const StarTable<Rational> t21(p21);
  CHECK(t21.normalized(0, 2) == Rational(-7));
  CHECK(t21.normalized(3, 2) == q("7/15"));
  CHECK(t21.normalized(4, 2) == q("41/225"));
  CHECK(t21.normalized(3, 8) == q("76627/109395"));
  CHECK(StarTable<Rational>(p31).normalized(3, 2) == q("5/14"));
  CHECK(StarTable<Rational>(p31).normalized(0, 2) == Rational(-17));
  CHECK(StarTable<Rational>(p32).normalized(0, 2) == Rational(-14));
  CHECK(StarTable<Rational>(p32).normalized(3, 2) == q("11/40"));
}

TEST_CASE("star_coeff examples") {
  CHECK(star_coeff(3, 2, p21) == q("-7/30"));
  for (long j = 1; j <= 10; ++j) {
    CHECK(star_coeff(2, j, p32) == sign(j + 1) / factorial(j));
  }
  for (long k = -2; k <= 6; ++k) CHECK(star_coeff(k, 0, p31).is_zero());
  CHECK_THROWS_AS(star_coeff(4, 3, Params(Rational(1), Rational(-2))), DomainError);
}

TEST_CASE("star_coeff_f") {
  for (long k = 0; k <= 5; ++k) {
    for (long j = 0; j <= 6; ++j) {
      CHECK(star_coeff_f(k, j, [](long m) { return Rational(2 * m + 1); }) == star_coeff(k, j, p21));
    }
  }
  CHECK(star_coeff_f(3, 1, [](long m) { return Rational(m * m); }) == Rational(1));
  CHECK(star_coeff_f(5, 0, [](long m) { return Rational(m); }).is_zero());
  CHECK_THROWS_AS(star_coeff_f(3, 3, [](long m) { return Rational(m - 2); }), DomainError);
}

TEST_CASE("f-harmonic expansions of the coefficients") {
  const std::vector<std::function<Rational(long)>> fs{
      [](long m) { return Rational(2 * m + 1); },
      [](long m) { return Rational(m * m + 1, 2); },
      [](long m) { return Rational(3 * m - 1, 4); },
  };
  const Triangle s1 = build_triangle(6, p10);
  for (const auto& f : fs) {
    for (long j = 1; j <= 5; ++j) {
      for (long k = 1; k <= 4; ++k) {
        const Rational target = star_coeff_f(k + 2, j, f);
        Rational first;
        Rational second;
        for (long i = 0; i < j; ++i) {
          const Rational w = Rational(j + 1) * sign(j - 1 - i) / (factorial(j - 1 - i) * factorial(i + 2));
          first += w * f_harmonic(i + 1, k, f);
          second += w * (f_harmonic(i + 2, k, f) - f(i + 2).pow(-k));
        }
        CHECK(first == target);
        CHECK(second == target);
        for (long r = 1; r < k; ++r) {
          Rational third;
          for (long i = 0; i < j; ++i) {
            const Rational w = sign(j - 1 - i) / (factorial(j - 1 - i) * factorial(i + 2));
            third += w * f_harmonic(i + 1, k - r, f) *
                     (Rational(i + 2) / f(i + 1).pow(r) + Rational(j - 1 - i) / f(i + 2).pow(r));
          }
          CHECK(third == target);
        }
        Rational triple;
        for (long m = 0; m <= k; ++m) {
          for (long i = 1; i <= k; ++i) {
            for (long r = 1; r <= j; ++r) {
              const Rational fr = f(r);
              triple += s1.entry(k, i) * reverse_s2(i - 1, m, p10) * binomial(j, r) * sign(j - r + m) * factorial(m) *
                        (fr - Rational(1)).pow(m) / (factorial(j) * factorial(k - 1) * fr.pow(m + 1));
            }
          }
        }
        CHECK(triple == target);
      }
    }
  }
}

TEST_CASE("coefficient recurrence") {
  CHECK(verify_star_recurrence(3, 2, p21));
  CHECK(verify_star_recurrence(0, 1, p32));
  auto ps = random_params(3, 20);
  ps.insert(ps.end(), {p21, p31, p32});
  for (const Params& p : ps) {
    for (long k = 0; k <= 6; ++k) {
      for (long j = 1; j <= 8; ++j) {
        CAPTURE(p.str());
        CHECK(verify_star_recurrence(k, j, p));
      }
    }
  }
}

TEST_CASE("memoized table matches the definition for random parameters") {
  for (const Params& p : random_params(5, 8)) {
    const StarTable<Rational> t(p);
    for (long k = -1; k <= 6; ++k) {
      for (long j = 0; j <= 8; ++j) CHECK(t.entry(k, j) == star_coeff(k, j, p));
    }
  }
}

TEST_CASE("complex parameters") {
  const ComplexParams p(ComplexRational(1), ComplexRational::i());
  const StarTable<ComplexRational> t(p);
  for (long k = 0; k <= 5; ++k) {
    for (long j = 0; j <= 6; ++j) CHECK(t.entry(k, j) == star_coeff(k, j, p));
  }
  CHECK(verify_star_recurrence(3, 4, p));
}

TEST_CASE("rtilde") {
  CHECK(rtilde(1, p21, 5) == Rational(1));
  CHECK(rtilde(0, p31, 2) == Rational(1));
  CHECK(rtilde(2, p21, 2) == q("8/15"));
  CHECK(rtilde(3, p21, 1) == q("1/9"));
  for (const Params& p : {p21, p31, p32}) {
    for (long j = 0; j <= 10; ++j) {
      const Rational h1 = hz_number(j, 1, p);
      const Rational h2 = hz_number(j, 2, p);
      const Rational h3 = hz_number(j, 3, p);
      const Rational h4 = hz_number(j, 4, p);
      CHECK(rtilde(2, p, j) == h1);
      CHECK(rtilde(3, p, j) == (h1 * h1 + h2) / Rational(2));
      CHECK(rtilde(4, p, j) == (h1.pow(3) + Rational(3) * h1 * h2 + Rational(2) * h3) / Rational(6));
      CHECK(rtilde(5, p, j) == (h1.pow(4) + Rational(6) * h1 * h1 * h2 + Rational(3) * h2 * h2 +
                                Rational(8) * h1 * h3 + Rational(6) * h4) /
                                   Rational(24));
    }
  }
}

TEST_CASE("rtilde through the harmonic recurrence") {
  CHECK(rtilde_via_recurrence(1, p21, 4) == Rational(1));
  CHECK(rtilde_via_recurrence(2, p21, 2) == q("8/15"));
  CHECK(rtilde_via_recurrence(5, p21, 3) == rtilde(5, p21, 3));
  for (const Params& p : {p21, p31, p32}) {
    for (long m = 1; m <= 8; ++m) {
      for (long j = 0; j <= 10; ++j) CHECK(rtilde_via_recurrence(m, p, j) == rtilde(m, p, j));
    }
  }
}

TEST_CASE("coefficients through rtilde") {
  CHECK(star_via_rtilde(1, 1, p21) == q("1/3"));
  CHECK(star_via_rtilde(0, 2, p32) == q("-1/2"));
  CHECK(star_via_rtilde(2, 2, p21) == q("-41/450"));
  for (const Params& p : {p21, p31, p32}) {
    for (long k = 0; k <= 5; ++k) {
      for (long j = 1; j <= 8; ++j) CHECK(star_via_rtilde(k, j, p) == star_coeff(k + 2, j, p));
    }
  }
  CHECK_THROWS_AS(star_via_rtilde(1, 1, p10), DomainError);
}

TEST_CASE("power and harmonic sum identities") {
  auto same = [](const std::pair<Rational, Rational>& pr) { return pr.first == pr.second; };
  CHECK(power_sum_identity(1, 1, p21).first == q("1/3"));
  CHECK(same(power_sum_identity(1, 1, p21)));
  CHECK(power_sum_identity(2, 2, p32).second == q("1/64"));
  CHECK(same(power_sum_identity(2, 2, p32)));
  CHECK(power_sum_identity(5, 1, p21).second == q("1/11"));
  CHECK(harmonic_sum_identity(1, 1, p21).second == q("1/3"));
  CHECK(harmonic_sum_identity(3, 2, p21).second == q("1891/11025"));
  CHECK(harmonic_sum_identity(0, 3, p31).second.is_zero());
  for (const Params& p : {p21, p31, p32}) {
    for (long n = 1; n <= 12; ++n) {
      for (long k = 1; k <= 6; ++k) {
        CHECK(same(power_sum_identity(n, k, p)));
        CHECK(same(harmonic_sum_identity(n, k, p)));
      }
    }
  }
}

TEST_CASE("sum identities re-expanded through first-kind numbers") {
  const Triangle s1 = build_triangle(14, p10);
  for (const Params& p : {p21, p32}) {
    const StarTable<Rational> t(p);
    for (long n = 1; n <= 10; ++n) {
      for (long k = 1; k <= 4; ++k) {
        Rational power;
        for (long m = 1; m <= n; ++m) {
          Rational inner;
          for (long j = m; j <= n; ++j) inner += s1.entry(j, m) * t.entry(k + 2, j) * sign(j);
          power += inner * sign(m) * Rational(n).pow(m);
        }
        CHECK(power == p.at(n).pow(-k));
        Rational harm;
        for (long pp = 0; pp <= n + 1; ++pp) {
          Rational inner;
          for (long j = 0; j <= n; ++j) inner += s1.entry(j + 1, pp) * t.entry(k + 2, j) * sign(j + 1) / Rational(j + 1);
          harm += inner * sign(pp) * Rational(n + 1).pow(pp);
        }
        CHECK(harm == hz_number(n, k, p));
      }
    }
  }
}

TEST_CASE("harmonic-number recurrences from rtilde") {
  CHECK(hk_recurrences(4, 3, p21));
  CHECK(hk_recurrences(2, 4, p32));
  CHECK(hk_recurrences(0, 3, p31));
  for (const Params& p : {p21, p31, p32}) {
    for (long n = 0; n <= 8; ++n) {
      for (long k = 3; k <= 6; ++k) CHECK(hk_recurrences(n, k, p));
    }
  }
  CHECK_THROWS_AS(hk_recurrences(2, 3, p10), DomainError);
  CHECK_THROWS_AS(hk_recurrences(2, 2, p21), DomainError);
}

TEST_CASE("second-kind numbers in reverse") {
  CHECK(reverse_s2(3, 2, p10) == Rational(3));
  CHECK(reverse_s2(1, 1, p32) == Rational(3));
  CHECK(reverse_s2(0, 0, p21) == Rational(1));
  for (long j = 1; j <= 5; ++j) CHECK(reverse_s2(0, j, p21).is_zero());
  // classical S(k, j) by S(k, j) = j S(k-1, j) + S(k-1, j-1)
  std::vector<std::vector<Rational>> s2(9, std::vector<Rational>(9));
  s2[0][0] = Rational(1);
  for (long k = 1; k <= 8; ++k) {
    for (long j = 1; j <= k; ++j) s2[k][j] = Rational(j) * s2[k - 1][j] + s2[k - 1][j - 1];
  }
  for (long k = 0; k <= 8; ++k) {
    for (long j = 0; j <= 8; ++j) CHECK(reverse_s2(k, j, p10) == s2[k][j]);
  }
}

}  // TEST_SUITE
