#include "zetaforge/elementary.hpp"

#include <cmath>
#include <mutex>
#include <optional>

#include "zetaforge/errors.hpp"

namespace zetaforge {

namespace {

// Sum of x^(2k+1)/(2k+1) * sign^k for small |x|, at the precision of x.
BigFloat odd_power_series(const BigFloat& x, bool alternating) {
  const long wp = x.precision();
  const BigFloat x2 = x * x;
  BigFloat power = x;
  BigFloat sum = x;
  for (long k = 1;; ++k) {
    power *= x2;
    if (alternating) power = -power;
    const BigFloat term = power / (2 * k + 1);
    if (term.is_zero() || term.exponent() < sum.exponent() - wp - 2) break;
    sum += term;
  }
  return sum;
}

// atan(1/n) for integer n >= 2.
BigFloat atan_inverse(long n, long wp) {
  BigFloat power(1L, wp);
  power /= n;
  BigFloat sum = power;
  const long n2 = n * n;
  for (long k = 1;; ++k) {
    power /= n2;
    power = -power;
    const BigFloat term = power / (2 * k + 1);
    if (term.is_zero() || term.exponent() < -wp - 2) break;
    sum += term;
  }
  return sum;
}

BigFloat compute_pi(long prec) {
  const long wp = prec + 16;
  BigFloat r = atan_inverse(5, wp) * 16L - atan_inverse(239, wp) * 4L;
  return r.with_precision(prec);
}

BigFloat compute_ln2(long prec) {
  // sum_{k>=1} 1/(k 2^k)
  const long wp = prec + 16;
  BigFloat sum = BigFloat::zero(wp);
  BigFloat power(1L, wp);
  for (long k = 1; k <= wp + 8; ++k) {
    power.ldexp(-1);
    sum += power / k;
  }
  return sum.with_precision(prec);
}

// Caches the most precise value computed so far; requests at lower precision
// are served by rounding it.
class ConstantCache {
 public:
  explicit ConstantCache(BigFloat (*fn)(long)) : fn_(fn) {}
  BigFloat get(long prec) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!value_ || value_->precision() < prec + 8) {
      value_ = fn_(std::max(prec + 8, 2 * (value_ ? value_->precision() : 0L)));
    }
    return value_->with_precision(prec);
  }

 private:
  BigFloat (*fn_)(long);
  std::mutex mu_;
  std::optional<BigFloat> value_;
};

ConstantCache& pi_cache() {
  static ConstantCache c(&compute_pi);
  return c;
}

ConstantCache& ln2_cache() {
  static ConstantCache c(&compute_ln2);
  return c;
}

}  // namespace

BigFloat pi(long prec) { return pi_cache().get(prec); }
BigFloat ln2(long prec) { return ln2_cache().get(prec); }

BigFloat sqrt(const BigFloat& x) { return x.sqrt(); }

BigFloat exp(const BigFloat& x) {
  const long prec = x.precision();
  if (x.is_zero()) return BigFloat(1L, prec);
  // x = k log 2 + r, |r| <= log2/2; then r / 2^h and square h times.
  const long guard = 24;
  long e = x.exponent();
  if (e > 40) throw DomainError("exp argument too large");
  const long wp0 = prec + guard + std::max(0L, e);
  const BigFloat l2 = ln2(wp0 + 8);
  const BigFloat q = x.with_precision(wp0 + 8) / l2;
  const long k = std::lround(q.to_double());
  const long h = 8;
  const long wp = wp0 + h;
  BigFloat r = x.with_precision(wp) - l2.with_precision(wp) * k;
  r.ldexp(-h);
  BigFloat term(1L, wp);
  BigFloat sum(1L, wp);
  for (long n = 1;; ++n) {
    term *= r;
    term /= n;
    if (term.is_zero() || term.exponent() < -wp - 2) break;
    sum += term;
  }
  for (long i = 0; i < h; ++i) sum *= sum;
  sum.ldexp(k);
  return sum.with_precision(prec);
}

BigFloat log(const BigFloat& x) {
  const long prec = x.precision();
  if (x.sign() <= 0) throw DomainError("log of non-positive value");
  const long wp = prec + 24;
  // x = m 2^e with m in [1/sqrt2, sqrt2).
  BigFloat m = x.with_precision(wp);
  long e = m.exponent();
  m.ldexp(-e);  // m in [1/2, 1)
  if (m.to_double() < 0.7071067811865476) {
    m.ldexp(1);
    --e;
  }
  const BigFloat t = (m - 1L) / (m + 1L);
  BigFloat r = odd_power_series(t, false);
  r.ldexp(1);
  if (e != 0) r += ln2(wp) * e;
  return r.with_precision(prec);
}

BigFloat atan(const BigFloat& x) {
  const long prec = x.precision();
  if (x.is_zero()) return x;
  const long wp = prec + 24;
  BigFloat y = x.with_precision(wp);
  const int s = y.sign();
  y = y.abs();
  bool inverted = false;
  if (y > BigFloat(1L, wp)) {
    y = 1L / y;
    inverted = true;
  }
  // atan(y) = 2 atan(y / (1 + sqrt(1 + y^2)))
  long halvings = 0;
  while (y.exponent() > -10) {
    y = y / (1L + (1L + y * y).sqrt());
    ++halvings;
  }
  BigFloat r = odd_power_series(y, true);
  r.ldexp(halvings);
  if (inverted) {
    BigFloat half_pi = pi(wp);
    half_pi.ldexp(-1);
    r = half_pi - r;
  }
  if (s < 0) r = -r;
  return r.with_precision(prec);
}

namespace {

// sin and cos together; doubling-angle reconstruction.
void sin_cos(const BigFloat& x, BigFloat& s_out, BigFloat& c_out) {
  const long prec = x.precision();
  const long h = 10;
  const long wp = prec + 24 + h + std::max(0L, x.exponent());
  BigFloat r = x.with_precision(wp);
  // reduce to [-pi, pi]
  BigFloat two_pi = pi(wp);
  two_pi.ldexp(1);
  if (r.abs() > two_pi) {
    const long k = std::lround((r / two_pi).to_double());
    r -= two_pi * k;
  }
  r.ldexp(-h);
  const BigFloat r2 = r * r;
  BigFloat s = r;
  BigFloat c(1L, wp);
  BigFloat ts = r;
  BigFloat tc(1L, wp);
  for (long n = 1;; ++n) {
    ts *= r2;
    ts /= (2 * n) * (2 * n + 1);
    ts = -ts;
    tc *= r2;
    tc /= (2 * n - 1) * (2 * n);
    tc = -tc;
    s += ts;
    c += tc;
    if (ts.exponent() < -wp - 2 && tc.exponent() < -wp - 2) break;
  }
  for (long i = 0; i < h; ++i) {
    BigFloat s2 = s * c;
    s2.ldexp(1);
    c = c * c - s * s;
    s = std::move(s2);
  }
  s_out = s.with_precision(prec);
  c_out = c.with_precision(prec);
}

}  // namespace

BigFloat sin(const BigFloat& x) {
  BigFloat s, c;
  sin_cos(x, s, c);
  return s;
}

BigFloat cos(const BigFloat& x) {
  BigFloat s, c;
  sin_cos(x, s, c);
  return c;
}

BigFloat cot(const BigFloat& x) {
  BigFloat s, c;
  sin_cos(x.with_precision(x.precision() + 16), s, c);
  if (s.is_zero()) throw DomainError("cot pole");
  return (c / s).with_precision(x.precision());
}

BigFloat sinh(const BigFloat& x) {
  const BigFloat e = exp(x.with_precision(x.precision() + 16 + std::max(0L, -x.exponent())));
  BigFloat r = e - 1L / e;
  r.ldexp(-1);
  return r.with_precision(x.precision());
}

BigFloat cosh(const BigFloat& x) {
  const BigFloat e = exp(x.with_precision(x.precision() + 16));
  BigFloat r = e + 1L / e;
  r.ldexp(-1);
  return r.with_precision(x.precision());
}

BigFloat coth(const BigFloat& x) {
  const long wp = x.precision() + 16 + std::max(0L, -x.exponent());
  const BigFloat e2 = exp(x.with_precision(wp) * 2L);
  return ((e2 + 1L) / (e2 - 1L)).with_precision(x.precision());
}

BigFloat csch(const BigFloat& x) { return 1L / sinh(x); }

}  // namespace zetaforge
