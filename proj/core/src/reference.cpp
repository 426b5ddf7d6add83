#include "zetaforge/reference.hpp"

#include <cmath>

#include "zetaforge/elementary.hpp"
#include "zetaforge/errors.hpp"

namespace zetaforge {

BigFloat cvz_alternating(const std::function<BigFloat(long, long)>& a, long prec, long scale_bits) {
  const long wp = prec + 16 + std::max(0L, scale_bits);
  // error ~ 2 * max|a| / (3+sqrt 8)^n, log2(3+sqrt8) = 2.5431
  const long n = static_cast<long>(std::ceil(static_cast<double>(prec + 8 + std::max(0L, scale_bits)) / 2.5431)) + 2;
  const BigFloat root = (BigFloat(3L, wp) + BigFloat(8L, wp).sqrt());
  BigFloat d = root.pow(n);
  d = (d + 1L / d);
  d.ldexp(-1);
  BigFloat b(-1L, wp);
  BigFloat c = -d;
  BigFloat s = BigFloat::zero(wp);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k, wp);
    // b <- b (k+n)(k-n) / ((k+1/2)(k+1))
    b *= (k + n) * (k - n) * 2;
    b /= (2 * k + 1) * (k + 1);
  }
  return (s / d).with_precision(prec);
}

namespace {

BigFloat inverse_power(long base, long s, long wp) {
  BigFloat b(base, wp);
  return 1L / b.pow(s);
}

// Direct sum_{n>=2} n^-s when it needs few terms, otherwise 0-length signal.
long direct_terms_needed(long s, long prec) {
  // tail after N terms <= N^(1-s)/(s-1); want < 2^-(prec+s+8) (relative to ~2^-s)
  const double bits = static_cast<double>(prec + s + 8);
  const double n = std::exp2(bits / static_cast<double>(s - 1));
  return n > 256.0 ? -1 : static_cast<long>(std::ceil(n)) + 1;
}

}  // namespace

BigFloat zeta(long s, long prec) {
  if (s < 2) throw DomainError("zeta needs integer s >= 2", s);
  // eta(s) = sum (-1)^k/(k+1)^s, zeta = eta/(1-2^(1-s))
  const long wp = prec + 8;
  const BigFloat eta = cvz_alternating([s](long k, long p) { return inverse_power(k + 1, s, p); }, wp);
  const BigFloat denom = 1L - BigFloat::pow2(1 - s, wp);
  return (eta / denom).with_precision(prec);
}

BigFloat zeta_minus_one(long s, long prec) {
  if (s < 2) throw DomainError("zeta needs integer s >= 2", s);
  const long n_max = direct_terms_needed(s, prec);
  if (n_max > 0) {
    const long wp = prec + 16;
    BigFloat sum = BigFloat::zero(wp);
    for (long n = n_max; n >= 2; --n) sum += inverse_power(n, s, wp);
    return sum.with_precision(prec);
  }
  // zeta(s) - 1 ~ 2^-s: s extra bits cover the cancellation
  return (zeta(s, prec + s + 8) - 1L).with_precision(prec);
}

BigFloat dirichlet_beta(long s, long prec) {
  if (s < 1) throw DomainError("dirichlet beta needs s >= 1", s);
  const long wp = prec + 8;
  return cvz_alternating([s](long k, long p) { return inverse_power(2 * k + 1, s, p); }, wp)
      .with_precision(prec);
}

BigFloat catalan(long prec) { return dirichlet_beta(2, prec); }

BigFloat alternating_hurwitz(long s, const Rational& z, long prec) {
  if (s < 1) throw DomainError("alternating hurwitz sum needs s >= 1", s);
  if (z.sign() <= 0) throw DomainError("alternating hurwitz sum needs z > 0");
  const long wp = prec + 8;
  const long scale = std::max(0L, static_cast<long>(std::ceil(-std::log2(z.mpq().get_d()) * static_cast<double>(s))));
  return cvz_alternating(
             [&](long k, long p) {
               const BigFloat base(z + Rational(k), p);
               return 1L / base.pow(s);
             },
             wp, scale)
      .with_precision(prec);
}

}  // namespace zetaforge
