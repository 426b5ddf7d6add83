#include "zetaforge/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <map>

#include "zetaforge/elementary.hpp"
#include "zetaforge/formal_series.hpp"
#include "zetaforge/reference.hpp"

namespace zetaforge {

std::string to_string(Tier t) { return t == Tier::required ? "required" : "optional"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::truncated: return "truncated";
  }
  return "fail";
}

Tier parse_tier(const std::string& text) {
  if (text == "required") return Tier::required;
  if (text == "optional") return Tier::optional;
  throw ParseError("tier must be 'required' or 'optional', got '" + text + "'");
}

namespace {

using C = BigComplex;
using Q = Rational;
using QC = ComplexRational;

// Walks j = 0, 1, 2, ... carrying B_j = binom_reciprocal(j) and the
// harmonic numbers H_j^(1..R) for one parameter pair, all exact.
template <class T>
class HarmonicWalk {
 public:
  HarmonicWalk(BasicParams<T> p, long orders) : p_(std::move(p)), h_(static_cast<std::size_t>(orders)) {}

  void step_to(long j) {
    while (j_ < j) {
      ++j_;
      const T f = p_.at(j_);
      if (f.is_zero()) throw DomainError("alpha*j+beta vanishes", j_);
      b_ *= p_.alpha * T(Q(j_)) / f;
      const T inv = T(1) / f;
      T pw = inv;
      for (auto& h : h_) {
        h += pw;
        pw *= inv;
      }
    }
  }
  const T& b() const noexcept { return b_; }
  const T& h(long r) const { return h_.at(static_cast<std::size_t>(r - 1)); }

 private:
  BasicParams<T> p_;
  long j_ = 0;
  T b_{1};
  std::vector<T> h_;
};

// Sums term(j, wp) for j = 0, 1, ... under the engine's stopping rule.
template <class V, class Term>
SeriesResult<V> sum_series(const EvalSpec& spec, const std::string& what, Term&& term) {
  const long wp = spec.working_precision();
  SeriesAccumulator<V> acc(spec, make_value<V>(0, wp));
  for (long j = 0;; ++j) {
    if (acc.add(j, term(j, wp))) break;
  }
  return require_converged(acc.result(), what);
}

BigFloat half_pow(long e, long wp) { return BigFloat::pow2(-e, wp); }

BigFloat rat(const Q& q, long wp) { return BigFloat(q, wp); }

// 1, 1 + H1, 1 + H1 + (H1^2 + H2)/2
template <class T>
T low_order_weight(long s, const T& h1, const T& h2) {
  switch (s) {
    case 1: return T(1);
    case 2: return T(1) + h1;
    case 3: return T(1) + h1 + (h1 * h1 + h2) * T(Q(1, 2));
  }
  throw DomainError("weight defined for s = 1, 2, 3 only", s);
}

// --- reference constants --------------------------------------------------

BigFloat pi_pow(long e, long wp) { return pi(wp).pow(e); }

BigFloat sqrt_of(long n, long wp) { return BigFloat(n, wp).sqrt(); }

// sum_{n>=1} (-1)^n x(n) through the accelerated alternating sum.
BigFloat cvz_from_one(const std::function<BigFloat(long n, long wp)>& x, long prec) {
  return -cvz_alternating([&](long k, long wp) { return x(k + 1, wp); }, prec);
}

// beta(s) = sum_j 2^-(j+1) B_j(2,1) W_s(j)
SeriesValue beta_rhs(long s, const EvalSpec& spec) {
  HarmonicWalk<Q> w(Params(2, 1), 2);
  const auto r = sum_series<BigFloat>(spec, "beta", [&](long j, long wp) {
    w.step_to(j);
    return rat(w.b() * low_order_weight(s, w.h(1), w.h(2)), wp) * half_pow(j + 1, wp);
  });
  const auto alt = lerch_phi<Q>(BigFloat(-1L, spec.working_precision()), s, Params(2, 1), spec);
  return {r.value, r.terms_used, C(alt.value)};
}

BigFloat beta_lhs(long s, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  switch (s) {
    case 1: return pi(wp) / 4L;
    case 2: return catalan(wp);
    default: return pi_pow(3, wp) / 32L;
  }
}

// chi_s(z) = sum_j B_j(2,1) W_s(j) z (-z^2)^j/(1-z^2)^(j+1)
SeriesValue chi_rhs(long s, const Q& z, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const BigFloat zf = rat(z, wp);
  const BigFloat z2 = zf * zf;
  const BigFloat ratio = -z2 / (1L - z2);
  BigFloat factor = zf / (1L - z2);
  HarmonicWalk<Q> w(Params(2, 1), 2);
  const auto r = sum_series<BigFloat>(spec, "chi", [&](long j, long p) {
    w.step_to(j);
    if (j > 0) factor *= ratio;
    return rat(w.b() * low_order_weight(s, w.h(1), w.h(2)), p) * factor;
  });
  const auto alt = lerch_phi<Q>(z2, s, Params(2, 1), spec);
  return {r.value, r.terms_used, C(zf * alt.value)};
}

BigFloat chi_lhs(long s, const Q& z, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const double bits_per_term = 2.0 * std::log2(1.0 / z.mpq().get_d());
  const long n = static_cast<long>(std::ceil(static_cast<double>(wp + 8) / bits_per_term)) + 2;
  const BigFloat zf = rat(z, wp);
  return zf * lerch_phi_direct<Q>(zf * zf, s, Params(2, 1), n);
}

// 4 sqrt(3) pi/9 as the transformed (3,1), (3,2) series, with the
// base -8 digit-type series as the alternate
SeriesValue bbp_pi_rhs(const EvalSpec& spec) {
  HarmonicWalk<Q> w1(Params(3, 1), 0);
  HarmonicWalk<Q> w2(Params(3, 2), 0);
  const auto b = sum_series<BigFloat>(spec, "bbp_pi_sqrt3", [&](long j, long wp) {
    w1.step_to(j);
    w2.step_to(j);
    const Q weight = Q(2) * w1.b() + Q(1, 2) * w2.b();
    return rat(weight * Q(8), wp) / BigFloat(9L, wp).pow(j + 1);
  });
  const auto a = sum_series<BigFloat>(spec, "bbp_pi_sqrt3 direct", [&](long k, long wp) {
    const Q t = Q(-1, 8).pow(k) * (Q(2, 3 * k + 1) + Q(1, 3 * k + 2));
    return rat(t, wp);
  });
  return {b.value, b.terms_used, C(a.value)};
}

BigFloat bbp_pi_lhs(const EvalSpec& spec) {
  const long wp = spec.working_precision();
  return sqrt_of(3, wp) * pi(wp) * 4L / 9L;
}

SeriesValue bbp_log_rhs(long n, const EvalSpec& spec) {
  HarmonicWalk<Q> w1(Params(3, 1), 0);
  HarmonicWalk<Q> w2(Params(3, 2), 0);
  const long n3 = n * n * n;
  const auto b = sum_series<BigFloat>(spec, "bbp_log", [&](long j, long wp) {
    w1.step_to(j);
    w2.step_to(j);
    const Q weight = Q(n * n) * w1.b() - Q(n, 2) * w2.b() - Q(2, 3 * (j + 1));
    return -rat(weight, wp) / BigFloat(n3 + 1, wp).pow(j + 1);
  });
  const auto a = sum_series<BigFloat>(spec, "bbp_log direct", [&](long k, long wp) {
    const Q t = Q(-1, n3).pow(k + 1) * (Q(n * n, 3 * k + 1) - Q(n, 3 * k + 2) - Q(2, 3 * k + 3));
    return rat(t, wp);
  });
  return {b.value, b.terms_used, C(a.value)};
}

BigFloat bbp_log_lhs(long n, const EvalSpec& spec) {
  return log(BigFloat(Q(n * n - n + 1, n * n), spec.working_precision()));
}

// sum_{n>=0} (-1)^n H_n/(2n+1)^s, s = 1, 2, 3, in the transformed form
//   sum_j B_j(2,1) (H_j - log 2)/2^(j+1) W_s(j)
SeriesResult<BigFloat> euler_alt_series(long s, const EvalSpec& spec) {
  HarmonicWalk<Q> w(Params(2, 1), 2);
  HarmonicWalk<Q> plain(Params(1, 0), 1);
  const BigFloat l2 = ln2(spec.working_precision());
  return sum_series<BigFloat>(spec, "euler_alt", [&](long j, long wp) {
    w.step_to(j);
    plain.step_to(j);
    const BigFloat hj = rat(plain.h(1), wp) - l2;
    return rat(w.b() * low_order_weight(s, w.h(1), w.h(2)), wp) * hj * half_pow(j + 1, wp);
  });
}

SeriesValue euler_alt_rhs(long s, const EvalSpec& spec) {
  const auto d = euler_alt_series(s, spec);
  const auto e = derivative_weighted_transform<Q>(s, Params(2, 1), BigFloat(-1L, spec.working_precision()),
                                                  harmonic_ogf_provider(), spec);
  return {d.value, d.terms_used, C(e.value)};
}

BigFloat euler_alt_closed(long s, long wp) {
  if (s == 1) return catalan(wp) - pi(wp) * ln2(wp) / 2L;
  // 3 beta(4) - (7 pi/16) zeta(3) - (pi^3/16) log 2
  return dirichlet_beta(4, wp) * 3L - pi(wp) * zeta(3, wp) * 7L / 16L - pi_pow(3, wp) * ln2(wp) / 16L;
}

// S3 against S2 + sum_j B_j (H_j - log 2)/2^(j+2) (H1^2 + H2)
SeriesValue euler_funceq_rhs(const EvalSpec& spec) {
  const auto s2 = euler_alt_series(2, spec);
  HarmonicWalk<Q> w(Params(2, 1), 2);
  HarmonicWalk<Q> plain(Params(1, 0), 1);
  const BigFloat l2 = ln2(spec.working_precision());
  const auto corr = sum_series<BigFloat>(spec, "euler_alt_funceq", [&](long j, long wp) {
    w.step_to(j);
    plain.step_to(j);
    const BigFloat hj = rat(plain.h(1), wp) - l2;
    return rat(w.b() * (w.h(1) * w.h(1) + w.h(2)), wp) * hj * half_pow(j + 2, wp);
  });
  return {s2.value + corr.value, s2.terms_used + corr.terms_used, C(euler_alt_closed(3, spec.working_precision()))};
}

// sum_j B_j(1,z) [1/z^2 + H1/z]/2^(j+1)
SeriesResult<BigFloat> polygamma_s2_series(const Q& z, const EvalSpec& spec) {
  HarmonicWalk<Q> w(Params(Q(1), z), 1);
  const Q iz = z.inverse();
  return sum_series<BigFloat>(spec, "polygamma_s2", [&](long j, long wp) {
    w.step_to(j);
    return rat(w.b() * (iz * iz + iz * w.h(1)), wp) * half_pow(j + 1, wp);
  });
}

// sum_j B_j(1,z) (H1^2 + H2)/z / 2^(j+2)
SeriesResult<BigFloat> polygamma_s3_correction(const Q& z, const EvalSpec& spec) {
  HarmonicWalk<Q> w(Params(Q(1), z), 2);
  const Q iz = z.inverse();
  return sum_series<BigFloat>(spec, "polygamma_s3", [&](long j, long wp) {
    w.step_to(j);
    return rat(w.b() * (w.h(1) * w.h(1) + w.h(2)) * iz, wp) * half_pow(j + 2, wp);
  });
}

SeriesValue polygamma_rhs(long s, const Q& z, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const auto s2 = polygamma_s2_series(z, spec);
  if (s == 2) {
    const auto alt = lerch_phi<Q>(BigFloat(-1L, wp), 2, Params(Q(1), z), spec);
    return {s2.value, s2.terms_used, C(alt.value)};
  }
  const auto corr = polygamma_s3_correction(z, spec);
  const auto alt = lerch_phi<Q>(BigFloat(-1L, wp), 3, Params(Q(1), z), spec);
  return {s2.value / rat(z, wp) + corr.value, s2.terms_used + corr.terms_used, C(alt.value)};
}

// 4z S3(z) = 4 S2(z) + 4 sum_j B_j(1,z) (H1^2 + H2)/2^(j+2); the polygamma
// differences are these alternating sums up to the factors shown.
BigFloat polygamma_funceq_lhs(const Q& z, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  return alternating_hurwitz(3, z, wp) * rat(z * Q(4), wp);
}

SeriesValue polygamma_funceq_rhs(const Q& z, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  HarmonicWalk<Q> w(Params(Q(1), z), 2);
  const auto r = sum_series<BigFloat>(spec, "polygamma_funceq", [&](long j, long p) {
    w.step_to(j);
    return rat(w.b() * (w.h(1) * w.h(1) + w.h(2)), p) * half_pow(j + 2, p);
  });
  return {alternating_hurwitz(2, z, wp) * 4L + r.value * 4L, r.terms_used, std::nullopt};
}

// --- quadratic denominators, complex parameters ----------------------------

BigComplex cval(const QC& q, long wp) { return BigComplex(q, wp); }

SeriesValue quad_rhs(long s, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const QC i = QC::i();
  const ComplexParams pp(QC(1), i);
  const ComplexParams pm(QC(1), -i);
  HarmonicWalk<QC> wpos(pp, 2);
  HarmonicWalk<QC> wneg(pm, 2);
  const auto r = sum_series<C>(spec, "quad", [&](long j, long p) {
    wpos.step_to(j);
    wneg.step_to(j);
    QC t;
    long shift = 0;
    if (s == 1) {
      t = wpos.b() + wneg.b();
      shift = j + 2;
    } else if (s == 2) {
      t = wpos.b() * (QC(2) + i * wpos.h(1)) - wneg.b() * (QC(-2) + i * wneg.h(1));
      shift = j + 3;
    } else {
      const QC hp = wpos.h(1);
      const QC hm = wneg.h(1);
      t = wpos.b() * (QC(8) + QC(5) * i * hp - hp * hp - wpos.h(2)) +
          wneg.b() * (QC(8) - QC(5) * i * hm - hm * hm - wneg.h(2));
      shift = j + 5;
    }
    C v = cval(t, p);
    v.ldexp(-shift);
    return v;
  });
  // partial fractions through the star-coefficient Lerch transform
  const C m1(-1L, wp);
  auto phi = [&](long order, const ComplexParams& par) { return lerch_phi<QC>(m1, order, par, spec).value; };
  const C ci = cval(i, wp);
  C alt;
  if (s == 1) {
    alt = ci * (phi(1, pp) - phi(1, pm));
    alt.ldexp(-1);
  } else if (s == 2) {
    alt = ci * phi(1, pm) - ci * phi(1, pp) + phi(2, pp) + phi(2, pm);
    alt = -alt;
    alt.ldexp(-2);
  } else {
    // 3i/16 (u^-1 - v^-1) - 3/16 (u^-2 + v^-2) - i/8 (u^-3 - v^-3), u = n+i, v = n-i
    C a = ci * (phi(1, pp) - phi(1, pm)) * 3L;
    a.ldexp(-4);
    C b = (phi(2, pp) + phi(2, pm)) * 3L;
    b.ldexp(-4);
    C c = ci * (phi(3, pp) - phi(3, pm));
    c.ldexp(-3);
    alt = a - b - c;
  }
  return {r.value, r.terms_used, alt};
}

BigFloat quad_lhs(long s, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const BigFloat p = pi(wp);
  const BigFloat cs = csch(p);
  const BigFloat ct = coth(p);
  if (s == 1) return (1L + p * cs) / 2L;
  if (s == 2) return (2L + p * (1L + p * ct) * cs) / 4L;
  const BigFloat cosh2 = cosh(p * 2L);
  return (16L + p * (1L + p * ct) * cs * 6L + p.pow(3) * (3L + cosh2) * cs.pow(3)) / 32L;
}

// --- trigonometric partial fractions ---------------------------------------

// sum_j B_j(1,b)/(b 2^(j+1)) = Phi(-1,1,1,b)
SeriesResult<BigFloat> unit_alternating(const Q& b, const EvalSpec& spec) {
  HarmonicWalk<Q> w(Params(Q(1), b), 0);
  const Q ib = b.inverse();
  return sum_series<BigFloat>(spec, "trig", [&](long j, long wp) {
    w.step_to(j);
    return rat(w.b() * ib, wp) * half_pow(j + 1, wp);
  });
}

SeriesValue trig_rhs(bool csc, const Q& x, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const BigFloat m1(-1L, wp);
  auto phi = [&](const Q& b) { return lerch_phi<Q>(m1, 1, Params(Q(1), b), spec).value; };
  if (csc) {
    const auto a = unit_alternating(Q(1) - x, spec);
    const auto b = unit_alternating(Q(1) + x, spec);
    const BigFloat head = rat(x.inverse(), wp);
    return {head + a.value - b.value, a.terms_used + b.terms_used, C(head + phi(Q(1) - x) - phi(Q(1) + x))};
  }
  const auto a = unit_alternating(x + Q(3, 2), spec);
  const auto b = unit_alternating(Q(1, 2) - x, spec);
  const BigFloat head = rat((x + Q(1, 2)).inverse(), wp);
  return {head - a.value + b.value, a.terms_used + b.terms_used, C(head - phi(x + Q(3, 2)) + phi(Q(1, 2) - x))};
}

BigFloat trig_lhs(bool csc, const Q& x, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const BigFloat p = pi(wp);
  const BigFloat arg = p * rat(x, wp);
  return csc ? p / sin(arg) : p / cos(arg);
}

// --- zeta(3), zeta(5) via the even-zeta generating function ---------------

// sum_j B_j(2,i) (-1/4)^j/j! D^j G(1/4), G = sum zeta(2k) z^k
SeriesValue zeta3_rhs(const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const ZetaEvenGf gf(wp);
  const BigFloat quarter = BigFloat::pow2(-2, wp);
  HarmonicWalk<Q> w(Params(2, 3), 0);
  const auto r = sum_series<BigFloat>(spec, "zeta3_cot", [&](long j, long p) {
    w.step_to(j);
    const Q c = w.b() * Q(-1, 4).pow(j) / (Q(3) * factorial(j));
    return rat(c, p) * gf.derivative(j, quarter).value;
  });
  const BigFloat scale = pi_pow(2, wp) * 2L / 9L;
  const BigFloat l2 = ln2(wp);
  const BigFloat direct = scale * (l2 + r.value * 2L);
  // engine route: sum_{n>=1} zeta(2n) 4^-n/(2n+3) plus the n = 0 term zeta(0)/3
  const auto t = derivative_weighted_transform<Q>(1, Params(2, 3), quarter, gf.provider(), spec);
  const BigFloat engine = scale * (l2 + (t.value + rat(Q(-1, 6), wp)) * 2L);
  return {direct, r.terms_used, C(engine)};
}

SeriesValue zeta5_rhs(const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const ZetaEvenGf gf(wp);
  const BigFloat quarter = BigFloat::pow2(-2, wp);
  const Q a[5] = {Q(1, 24), Q(-1, 6), Q(1, 4), Q(-1, 6), Q(1, 24)};
  std::vector<HarmonicWalk<Q>> walks;
  for (long i = 1; i <= 5; ++i) walks.emplace_back(Params(Q(2), Q(i)), 0);
  const auto r = sum_series<BigFloat>(spec, "zeta5_bbp", [&](long j, long p) {
    Q c;
    for (long i = 1; i <= 5; ++i) {
      auto& w = walks[static_cast<std::size_t>(i - 1)];
      w.step_to(j);
      c += w.b() * a[i - 1] / Q(i);
    }
    c *= Q(-1, 4).pow(j) / factorial(j);
    return rat(c, p) * gf.derivative(j, quarter).value;
  });
  const BigFloat p2 = pi_pow(2, wp);
  const BigFloat v = p2 * zeta(3, wp) * 16L / 147L + p2 * p2 * r.value * 32L / 49L;
  return {v, r.terms_used, std::nullopt};
}

// --- alternating Hurwitz at (3,1), (3,2) ----------------------------------

SeriesValue ahz_rhs(long s, const EvalSpec& spec) {
  const BigFloat m1(-1L, spec.working_precision());
  const auto a = lerch_phi_rtilde<Q>(m1, s, Params(3, 1), spec);
  const auto b = lerch_phi_rtilde<Q>(m1, s, Params(3, 2), spec);
  const auto sa = lerch_phi<Q>(m1, s, Params(3, 1), spec);
  const auto sb = lerch_phi<Q>(m1, s, Params(3, 2), spec);
  return {a.value - b.value, a.terms_used + b.terms_used, C(sa.value - sb.value)};
}

BigFloat ahz_lhs(long s, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  if (s == 2) return pi_pow(2, wp) * 2L / 27L;
  if (s == 3) return zeta(3, wp) * 13L / 18L;
  return pi_pow(4, wp) * 7L / 729L;
}

// --- exotic Euler sums -----------------------------------------------------

// H_n as floats, extended on demand (single-threaded per evaluation)
class HarmonicCache {
 public:
  BigFloat operator()(long n, long wp) {
    while (static_cast<long>(h_.size()) <= n) {
      const long m = static_cast<long>(h_.size());
      h_.push_back(m == 0 ? Q(0) : h_.back() + Q(1, m));
    }
    return rat(h_[static_cast<std::size_t>(n)], wp);
  }

 private:
  std::vector<Q> h_;
};

BigFloat exotic_lhs(long q, const EvalSpec& spec) {
  HarmonicCache h;
  return cvz_from_one(
      [&](long n, long wp) {
        const Q d = Q((2 * n - 1) * 2 * n * (2 * n + 1)).pow(q);
        return h(n, wp).square() / rat(d, wp);
      },
      spec.working_precision());
}

SeriesValue exotic_rhs(long q, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  HarmonicCache h;
  // sum_{n>=1} (-1)^n H_n^2 / g(n)
  auto part = [&](const std::function<Q(long)>& g) {
    return cvz_from_one([&](long n, long p) { return h(n, p).square() / rat(g(n), p); }, wp);
  };
  const long cvz_terms = static_cast<long>(std::ceil(static_cast<double>(wp + 8) / 2.5431)) + 2;
  if (q == 1) {
    const BigFloat v = part([](long n) { return Q(2 * n + 1); }) - part([](long n) { return Q(n); }) +
                       part([](long n) { return Q(2 * n - 1); });
    return {v / 2L, 3 * cvz_terms, std::nullopt};
  }
  const BigFloat v = part([](long n) { return Q(2 * n + 1); }) * 3L - part([](long n) { return Q(2 * n - 1); }) * 3L +
                     part([](long n) { return Q(2 * n + 1).pow(2); }) + part([](long n) { return Q(n).pow(2); }) +
                     part([](long n) { return Q(2 * n - 1).pow(2); });
  return {v / 4L, 5 * cvz_terms, std::nullopt};
}

// --- H_n^2 generating functions, coefficient level -------------------------

constexpr long kHn2Order = 15;

// rhs = sum_n H_n^2 plus the total absolute coefficient mismatch of all three
// expansions, so abs_err is exactly that mismatch.
SeriesValue hn2_rhs(const EvalSpec& spec) {
  using S = FormalSeries<Q>;
  const long n = kHn2Order;
  S li2(n);
  S log1m(n);
  for (long k = 1; k <= n; ++k) {
    li2.set(k, Q(1, k * k));
    log1m.set(k, Q(-1, k));
  }
  const S inv = S::geometric(Q(1), n);
  const S g1 = (log1m * log1m + li2) * inv;
  const S w = -(S::monomial(Q(1), 1, n) * inv);  // -z/(1-z)
  const S g2 = -((li2.compose(w) * Q(2) + li2) * inv);
  // Li2(z)/(1-z) = -sum_j (H_j^2 + H_j^(2))/2 (1-z)^-2 w^j
  S g3(n);
  S wp_ = S::constant(Q(1), n);
  for (long j = 0; j <= n; ++j) {
    const Q h1 = harmonic(j);
    const Q c = (h1 * h1 + harmonic(j, 2)) * Q(-1, 2);
    g3 += inv * inv * wp_ * c;
    wp_ = wp_ * w;
  }
  const S li2_over = li2 * inv;
  Q sum;
  Q mismatch;
  for (long k = 0; k <= n; ++k) {
    const Q h = harmonic(k);
    const Q h2 = h * h;
    sum += h2;
    mismatch += (g1[k] - h2).abs() + (g2[k] - h2).abs() + (g3[k] - li2_over[k]).abs();
  }
  return {C(rat(sum + mismatch, spec.working_precision())), n + 1, std::nullopt};
}

BigFloat hn2_lhs(const EvalSpec& spec) {
  Q sum;
  for (long k = 0; k <= kHn2Order; ++k) sum += harmonic(k) * harmonic(k);
  return rat(sum, spec.working_precision());
}

// --- pi^2/12 with (3,i), i = 1, 2, 3 --------------------------------------

SeriesValue pi2_12_rhs(const EvalSpec& spec) {
  const BigFloat m1(-1L, spec.working_precision());
  const long c[3] = {13, -13, 4};
  BigFloat v = BigFloat::zero(spec.working_precision());
  BigFloat alt = v;
  long terms = 0;
  for (long i = 1; i <= 3; ++i) {
    const auto r = lerch_phi_rtilde<Q>(m1, 2, Params(3, i), spec);
    const auto a = lerch_phi<Q>(m1, 2, Params(3, i), spec);
    v += r.value * c[i - 1];
    alt += a.value * c[i - 1];
    terms += r.terms_used;
  }
  return {v / 12L, terms, C(alt / 12L)};
}

// --- optional-tier extras ---------------------------------------------------

SeriesValue fib_rhs(const Q& x, const EvalSpec& spec) {
  const long wp = spec.working_precision();
  const BigFloat xf = rat(x, wp);
  const BigFloat s5 = sqrt_of(5, wp);
  const BigFloat t = xf * 2L / (1L + (1L + xf * xf * 4L / 5L).sqrt());
  const BigFloat phi_big = (1L + s5) / 2L;
  const BigFloat phi_small = (1L - s5) / 2L;
  long terms = 0;
  auto arctan_series = [&](const BigFloat& c) {
    const auto r = lerch_phi_rtilde<Q>(-(c * c), 1, Params(2, 1), spec);
    terms += r.terms_used;
    return c * r.value;
  };
  const BigFloat v = arctan_series(phi_big * t / s5) - arctan_series(phi_small * t / s5);
  // defining series sum_n (-1)^n F_{2n+1} t^(2n+1)/(5^n (2n+1))
  mpz_class f_prev = 0;
  mpz_class f_cur = 1;  // F_1
  const BigFloat t2 = t * t;
  BigFloat tp = t;
  const auto d = sum_series<BigFloat>(spec, "fib_arctan direct", [&](long n, long p) {
    if (n > 0) {
      // advance two Fibonacci steps: F_{2n-1} -> F_{2n+1}
      for (int step = 0; step < 2; ++step) {
        const mpz_class next = f_prev + f_cur;
        f_prev = f_cur;
        f_cur = next;
      }
      tp *= t2;
    }
    BigFloat term = BigFloat(f_cur, p) * tp / BigFloat(5L, p).pow(n) / (2 * n + 1);
    return n % 2 == 0 ? term : -term;
  });
  return {v, terms, C(d.value)};
}

BigFloat fib_lhs(const Q& x, const EvalSpec& spec) { return atan(rat(x, spec.working_precision())); }

SeriesValue central_zeta3_rhs(const EvalSpec& spec) {
  const auto r = sum_series<BigFloat>(spec, "central_binom_zeta3", [&](long j, long wp) {
    const long k = j + 1;
    const Q t = Q(k % 2 == 1 ? 1 : -1) / (Q(k * k * k) * binomial(2 * k, k));
    return rat(t, wp);
  });
  return {r.value * 5L / 2L, r.terms_used, std::nullopt};
}

SeriesValue central_asin_rhs(const Q& x, const EvalSpec& spec) {
  const Q x2 = Q(4) * x * x;
  const auto r = sum_series<BigFloat>(spec, "central_binom_asin", [&](long j, long wp) {
    const long n = j + 1;
    return rat(x2.pow(n) / (Q(n * n) * binomial(2 * n, n)), wp);
  });
  return {r.value / 2L, r.terms_used, std::nullopt};
}

BigFloat central_asin_lhs(const Q& x, const EvalSpec& spec) {
  const BigFloat xf = rat(x, spec.working_precision());
  return atan(xf / (1L - xf * xf).sqrt()).square();
}

std::string frac_tag(const Q& q) { return q.str(); }

std::vector<Identity> build_registry() {
  std::vector<Identity> out;
  const EvalSpec base(default_precision());
  auto add = [&](std::string id, Tier tier, std::string description, std::function<BigFloat(const EvalSpec&)> lhs,
                 std::function<SeriesValue(const EvalSpec&)> rhs, double tol, long tol_prec = 128,
                 std::optional<EvalSpec> spec = std::nullopt) {
    Identity e;
    e.id = std::move(id);
    e.tier = tier;
    e.description = std::move(description);
    e.lhs_oracle = std::move(lhs);
    e.rhs_series = std::move(rhs);
    e.default_spec = spec.value_or(base);
    e.tolerance_precision = tol_prec;
    e.registered_tolerance = BigFloat::from_double(tol, 64);
    e.tolerance = BigFloat::zero(64);
    out.push_back(std::move(e));
  };

  for (long s = 1; s <= 3; ++s) {
    add("beta" + std::to_string(s), Tier::required, "Dirichlet beta(" + std::to_string(s) + "), (2,1) weights at z=-1",
        [s](const EvalSpec& sp) { return beta_lhs(s, sp); },
        [s](const EvalSpec& sp) { return beta_rhs(s, sp); }, 1e-30);
  }
  for (long s = 1; s <= 3; ++s) {
    for (const Q& z : {Q(1, 2), Q(1, 3)}) {
      add("chi" + std::to_string(s) + "@" + frac_tag(z), Tier::required,
          "Legendre chi_" + std::to_string(s) + "(" + z.str() + ") via the z^2 transform",
          [s, z](const EvalSpec& sp) { return chi_lhs(s, z, sp); },
          [s, z](const EvalSpec& sp) { return chi_rhs(s, z, sp); }, 1e-30);
    }
  }
  add("bbp_pi_sqrt3", Tier::required, "4 sqrt(3) pi/9 from (3,1),(3,2) weights at 1/9", bbp_pi_lhs, bbp_pi_rhs,
      1e-30);
  for (long n : {2L, 3L}) {
    add("bbp_log_" + std::to_string(n), Tier::required,
        "log((n^2-n+1)/n^2) at n=" + std::to_string(n) + " from (3,1),(3,2),(3,3) weights",
        [n](const EvalSpec& sp) { return bbp_log_lhs(n, sp); },
        [n](const EvalSpec& sp) { return bbp_log_rhs(n, sp); }, 1e-30);
  }
  add("euler_alt_1", Tier::required, "sum (-1)^n H_n/(2n+1) = G - (pi/2) log 2",
      [](const EvalSpec& sp) { return euler_alt_closed(1, sp.working_precision()); },
      [](const EvalSpec& sp) { return euler_alt_rhs(1, sp); }, 1e-25);
  add("euler_alt_3", Tier::required, "sum (-1)^n H_n/(2n+1)^3 against beta(4), zeta(3), log 2",
      [](const EvalSpec& sp) { return euler_alt_closed(3, sp.working_precision()); },
      [](const EvalSpec& sp) { return euler_alt_rhs(3, sp); }, 1e-25);
  add("euler_alt_funceq", Tier::required, "sum (-1)^n H_n/(2n+1)^3 written through the ^2 sum",
      [](const EvalSpec& sp) { return euler_alt_series(3, sp).value; }, euler_funceq_rhs, 1e-25);
  for (const Q& z : {Q(1, 2), Q(1, 3), Q(2, 5)}) {
    const std::string tag = "@" + frac_tag(z);
    add("polygamma_s2" + tag, Tier::required, "sum (-1)^k/(k+z)^2 at z=" + z.str(),
        [z](const EvalSpec& sp) { return alternating_hurwitz(2, z, sp.working_precision()); },
        [z](const EvalSpec& sp) { return polygamma_rhs(2, z, sp); }, 1e-25);
    add("polygamma_s3" + tag, Tier::required, "sum (-1)^k/(k+z)^3 through the ^2 sum at z=" + z.str(),
        [z](const EvalSpec& sp) { return alternating_hurwitz(3, z, sp.working_precision()); },
        [z](const EvalSpec& sp) { return polygamma_rhs(3, z, sp); }, 1e-25);
    add("polygamma_funceq" + tag, Tier::required, "psi'' difference against psi' difference at z=" + z.str(),
        [z](const EvalSpec& sp) { return polygamma_funceq_lhs(z, sp); },
        [z](const EvalSpec& sp) { return polygamma_funceq_rhs(z, sp); }, 1e-25);
  }
  for (long s = 1; s <= 3; ++s) {
    add("quad_s" + std::to_string(s), Tier::required,
        "sum (-1)^n/(n^2+1)^" + std::to_string(s) + " with (1,i),(1,-i) weights",
        [s](const EvalSpec& sp) { return quad_lhs(s, sp); },
        [s](const EvalSpec& sp) { return quad_rhs(s, sp); }, 1e-25);
  }
  for (const Q& x : {Q(1, 3), Q(1, 5)}) {
    const std::string tag = "@" + frac_tag(x);
    add("trig_csc" + tag, Tier::required, "pi/sin(pi x) at x=" + x.str(),
        [x](const EvalSpec& sp) { return trig_lhs(true, x, sp); },
        [x](const EvalSpec& sp) { return trig_rhs(true, x, sp); }, 1e-25);
    add("trig_sec" + tag, Tier::required, "pi sec(pi x) at x=" + x.str(),
        [x](const EvalSpec& sp) { return trig_lhs(false, x, sp); },
        [x](const EvalSpec& sp) { return trig_rhs(false, x, sp); }, 1e-25);
  }
  {
    EvalSpec sp(160, 60);
    sp.tail_tolerance = BigFloat::from_double(1e-25, 64);
    add("zeta3_cot", Tier::required, "zeta(3) from derivatives of -(pi sqrt z/2) cot(pi sqrt z) at 1/4",
        [](const EvalSpec& s) { return zeta(3, s.working_precision()); }, zeta3_rhs, 1e-15, 160, sp);
  }
  for (long s = 2; s <= 4; ++s) {
    add("ahz_zeta" + std::to_string(s), Tier::required,
        "Phi(-1,s,3,1) - Phi(-1,s,3,2) at s=" + std::to_string(s),
        [s](const EvalSpec& sp) { return ahz_lhs(s, sp); },
        [s](const EvalSpec& sp) { return ahz_rhs(s, sp); }, 1e-25);
  }
  for (long q = 1; q <= 2; ++q) {
    add("exotic_a" + std::to_string(q), Tier::required,
        "sum (-1)^n H_n^2/[(2n-1)2n(2n+1)]^" + std::to_string(q) + " against its partial fractions",
        [q](const EvalSpec& sp) { return exotic_lhs(q, sp); },
        [q](const EvalSpec& sp) { return exotic_rhs(q, sp); }, 1e-20);
  }
  add("hn2_ogf", Tier::required, "H_n^2 and Li2/(1-z) generating functions, coefficients n <= 15 (exact)", hn2_lhs,
      hn2_rhs, 1e-30);
  add("pi2_12_deg2", Tier::required, "pi^2/12 from 13,-13,4 weights over (3,1),(3,2),(3,3)",
      [](const EvalSpec& sp) { return pi_pow(2, sp.working_precision()) / 12L; }, pi2_12_rhs, 1e-25);

  add("zeta5_bbp", Tier::optional, "zeta(5) from (2,i) weights i=1..5 and cotangent derivatives",
      [](const EvalSpec& s) { return zeta(5, s.working_precision()); }, zeta5_rhs, 1e-10, 256, EvalSpec(256, 500));
  for (const Q& x : {Q(1, 2), Q(1, 5)}) {
    add("fib_arctan@" + frac_tag(x), Tier::optional, "arctan(x) from the odd Fibonacci series at x=" + x.str(),
        [x](const EvalSpec& sp) { return fib_lhs(x, sp); },
        [x](const EvalSpec& sp) { return fib_rhs(x, sp); }, 1e-25);
  }
  add("central_binom_zeta3", Tier::optional, "zeta(3) = 5/2 sum (-1)^(k-1)/(k^3 C(2k,k))",
      [](const EvalSpec& s) { return zeta(3, s.working_precision()); }, central_zeta3_rhs, 1e-25);
  add("central_binom_asin@1/4", Tier::optional, "asin(x)^2 = 1/2 sum (2x)^(2n)/(n^2 C(2n,n)) at x=1/4",
      [](const EvalSpec& sp) { return central_asin_lhs(Q(1, 4), sp); },
      [](const EvalSpec& sp) { return central_asin_rhs(Q(1, 4), sp); }, 1e-25);

  for (auto& e : out) e.tolerance = scaled_tolerance(e, e.default_spec.precision_bits);
  std::sort(out.begin(), out.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
  return out;
}

BigFloat nan_value(long prec) {
  BigFloat x = BigFloat::zero(prec);
  mpfr_set_nan(x.get());
  return x;
}

Report run(const Identity& e, const EvalSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  Report r;
  r.id = e.id;
  r.precision_bits = spec.precision_bits;
  r.tolerance = scaled_tolerance(e, spec.precision_bits);
  const long wp = spec.working_precision();
  r.lhs = nan_value(wp);
  r.rhs = C(nan_value(wp), BigFloat::zero(wp));
  r.abs_err = nan_value(wp);
  r.rel_err = nan_value(wp);
  try {
    r.lhs = e.lhs_oracle(spec);
    const SeriesValue v = e.rhs_series(spec);
    r.rhs = v.value;
    r.terms_used = v.terms_used;
    r.abs_err = (r.rhs - C(r.lhs)).abs();
    r.rel_err = r.lhs.is_zero() ? r.abs_err : r.abs_err / r.lhs.abs();
    if (v.alternate) r.cross_err = (*v.alternate - r.rhs).abs();
    r.status = r.abs_err < r.tolerance ? Status::pass : Status::fail;
  } catch (const TruncationError& ex) {
    r.status = Status::truncated;
    r.terms_used = ex.terms_used();
    r.note = ex.what();
  } catch (const DomainError& ex) {
    r.status = Status::fail;
    r.note = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

std::vector<IdentityInfo> list_identities() {
  std::vector<IdentityInfo> out;
  for (const auto& e : registry()) out.push_back({e.id, e.tier, e.description});
  return out;
}

const Identity& find_identity(const std::string& id) {
  const auto& reg = registry();
  const auto it = std::lower_bound(reg.begin(), reg.end(), id, [](const Identity& e, const std::string& k) {
    return e.id < k;
  });
  if (it == reg.end() || it->id != id) throw UnknownIdentity(id);
  return *it;
}

BigFloat scaled_tolerance(const Identity& e, long precision_bits) {
  BigFloat tol = e.registered_tolerance.with_precision(64);
  if (precision_bits > e.tolerance_precision) tol.ldexp(-(precision_bits - e.tolerance_precision));
  const BigFloat floor = BigFloat::pow2(-(precision_bits - 16), 64);
  return max(tol, floor);
}

Report evaluate_identity(const std::string& id, const std::optional<EvalSpec>& spec) {
  const Identity& e = find_identity(id);
  return run(e, spec.value_or(e.default_spec));
}

std::vector<Report> evaluate_all(std::optional<Tier> tier, const std::optional<EvalSpec>& spec) {
  std::vector<std::future<Report>> jobs;
  for (const auto& e : registry()) {
    if (tier && e.tier != *tier) continue;
    const Identity* ptr = &e;
    jobs.push_back(std::async(std::launch::async, [ptr, spec] { return run(*ptr, spec.value_or(ptr->default_spec)); }));
  }
  std::vector<Report> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.id < b.id; });
  return out;
}

}  // namespace zetaforge
