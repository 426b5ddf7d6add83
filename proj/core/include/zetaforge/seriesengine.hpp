#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zetaforge/bigfloat.hpp"
#include "zetaforge/exactnum.hpp"
#include "zetaforge/formal_series.hpp"
#include "zetaforge/startransform.hpp"

namespace zetaforge {

/// Precision and truncation controls for one series evaluation.
struct EvalSpec {
  long precision_bits = default_precision();
  long max_terms = 500;
  /// Defaults to 2^-(precision_bits + 8).
  std::optional<BigFloat> tail_tolerance;

  EvalSpec() = default;
  explicit EvalSpec(long prec, long terms = 500) : precision_bits(prec), max_terms(terms) { validate(); }

  long working_precision() const noexcept { return precision_bits + kGuardBits; }
  BigFloat tolerance() const;
  void validate() const;
};

/// Raised when a series misses its tolerance within max_terms.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, BigFloat last_term, long terms_used)
      : std::runtime_error(what), last_term_(std::move(last_term)), terms_used_(terms_used) {}
  const BigFloat& last_term() const noexcept { return last_term_; }
  long terms_used() const noexcept { return terms_used_; }

 private:
  BigFloat last_term_;
  long terms_used_;
};

template <class V>
struct SeriesResult {
  V value;
  BigFloat bound;        // estimated truncation error
  long terms_used = 0;
  bool converged = false;
  BigFloat last_term;    // magnitude of the final term added
};

/// Running sum with the stopping rule: stop at the first index j >= 8 with
/// |term_j| < tol * max(1, |S_j|), or after max_terms terms.
template <class V>
class SeriesAccumulator {
 public:
  SeriesAccumulator(const EvalSpec& spec, V initial)
      : tol_(spec.tolerance().with_precision(spec.working_precision())),
        max_terms_(spec.max_terms),
        sum_(std::move(initial)),
        last_(BigFloat::zero(spec.working_precision())),
        prev_(BigFloat::zero(spec.working_precision())) {}

  /// Adds term j; true means stop (converged or out of budget).
  bool add(long j, const V& term) {
    sum_ += term;
    ++terms_;
    prev_ = std::move(last_);
    last_ = magnitude(term);
    if (j >= 8) {
      BigFloat scale = magnitude(sum_);
      if (scale < BigFloat(1L, scale.precision())) scale = BigFloat(1L, scale.precision());
      if (last_ < tol_ * scale) {
        converged_ = true;
        return true;
      }
    }
    return terms_ >= max_terms_;
  }

  long terms() const noexcept { return terms_; }
  const V& sum() const noexcept { return sum_; }

  SeriesResult<V> result() const {
    SeriesResult<V> r{sum_, last_, terms_, converged_, last_};
    if (!prev_.is_zero() && !last_.is_zero()) {
      const BigFloat rho = last_ / prev_;
      const BigFloat cap = BigFloat::from_double(0.95, rho.precision());
      r.bound = rho < cap ? last_ * rho / (1L - rho) : last_ * 20L;
    }
    return r;
  }

 private:
  BigFloat tol_;
  long max_terms_;
  V sum_;
  BigFloat last_;
  BigFloat prev_;
  long terms_ = 0;
  bool converged_ = false;
};

/// Throws TruncationError unless r converged.
template <class V>
SeriesResult<V> require_converged(SeriesResult<V> r, const std::string& what) {
  if (!r.converged) {
    throw TruncationError(what + ": no convergence within " + std::to_string(r.terms_used) + " terms",
                          r.last_term, r.terms_used);
  }
  return r;
}

namespace detail {

inline bool is_minus_one(const BigFloat& z) { return z == BigFloat(-1L, z.precision()); }
inline bool is_minus_one(const BigComplex& z) { return z.im().is_zero() && is_minus_one(z.re()); }
inline bool is_one(const BigFloat& z) { return z == BigFloat(1L, z.precision()); }
inline bool is_one(const BigComplex& z) { return z.im().is_zero() && is_one(z.re()); }

template <class V>
void require_geometric_domain(const V& z) {
  if (is_one(z)) throw DomainError("z = 1 is outside the transform domain");
  if (is_minus_one(z)) return;
  if (!(magnitude(z) < BigFloat(1L, z.precision()))) {
    throw DomainError("transform needs |z| < 1 or z = -1");
  }
}

}  // namespace detail

/// sum_{j>=1} <k+2,j>* j! z^j/(1-z)^(j+1), which equals
/// sum_{n>=1} z^n/(alpha n + beta)^k. The series converges when
/// |z/(1-z)| < 1 (Re z < 1/2); elsewhere it reports truncation.
template <class T>
SeriesResult<value_t<T>> geometric_transform(long k, const BasicParams<T>& p, const value_t<T>& z_in,
                                             const EvalSpec& spec) {
  using V = value_t<T>;
  if (k < 1) throw DomainError("geometric_transform needs k >= 1", k);
  detail::require_geometric_domain(z_in);
  const long wp = spec.working_precision();
  const V z = z_in.with_precision(wp);
  SeriesAccumulator<V> acc(spec, make_value<V>(0, wp));
  if (z.is_zero()) {
    for (long j = 1; !acc.add(j, make_value<V>(0, wp)); ++j) {
    }
    return acc.result();
  }
  const V one_minus = make_value<V>(1, wp) - z;
  const V w = z / one_minus;
  V factor = w / one_minus;  // z/(1-z)^2
  const StarTable<T> table(p);
  for (long j = 1;; ++j) {
    const V term = to_value(table.scaled(k + 2, j), wp) * factor;
    if (acc.add(j, term)) break;
    factor *= w;
  }
  return require_converged(acc.result(), "geometric_transform");
}

/// sum_{j>=1} <k+2,j>* (r z)^j e^(r z) = sum_{n>=1} (r z)^n/(n! (alpha n + beta)^k).
SeriesResult<BigFloat> exponential_transform(long k, const Params& p, const BigFloat& r, const BigFloat& z,
                                             const EvalSpec& spec);

/// Phi(z,s,alpha,beta) = beta^-s + geometric_transform(s, p, z).
template <class T>
SeriesResult<value_t<T>> lerch_phi(const value_t<T>& z, long s, const BasicParams<T>& p, const EvalSpec& spec) {
  if (p.beta.is_zero()) throw DomainError("lerch_phi needs beta != 0 (the n = 0 term is beta^-s)");
  auto r = geometric_transform(s, p, z, spec);
  r.value += to_value(p.beta.pow(-s), spec.working_precision());
  return r;
}

/// Direct partial sum sum_{n=0..N} z^n/(alpha n + beta)^s, exact.
template <class T>
T lerch_phi_direct(const T& z, long s, const BasicParams<T>& p, long n_terms) {
  if (p.beta.is_zero()) throw DomainError("lerch_phi_direct needs beta != 0");
  T sum;
  T power(1);
  for (long n = 0; n <= n_terms; ++n) {
    const T f = p.at(n);
    if (f.is_zero()) throw DomainError("lerch_phi_direct: alpha*n+beta vanishes", n);
    sum += power / f.pow(s);
    power *= z;
  }
  return sum;
}

/// Direct partial sum in floating point at the precision of z.
template <class T>
value_t<T> lerch_phi_direct(const value_t<T>& z, long s, const BasicParams<T>& p, long n_terms) {
  using V = value_t<T>;
  if (p.beta.is_zero()) throw DomainError("lerch_phi_direct needs beta != 0");
  const long wp = z.precision();
  V sum = make_value<V>(0, wp);
  V power = make_value<V>(1, wp);
  for (long n = 0; n <= n_terms; ++n) {
    const T f = p.at(n);
    if (f.is_zero()) throw DomainError("lerch_phi_direct: alpha*n+beta vanishes", n);
    sum += power / to_value(f.pow(s), wp);
    power *= z;
  }
  return sum;
}

/// Phi through the harmonic-number expansion of the star coefficients:
///   sum_{j>=0} B_j W_j (-z)^j/(1-z)^(j+1),  W_j = sum_{m=0..s-1} R~_{m+1}(j)/beta^(s-m),
/// with B_j = binom_reciprocal(j). All coefficients are exact until the
/// final conversion of each term.
template <class T>
SeriesResult<value_t<T>> lerch_phi_rtilde(const value_t<T>& z_in, long s, const BasicParams<T>& p,
                                          const EvalSpec& spec) {
  using V = value_t<T>;
  if (p.beta.is_zero()) throw DomainError("lerch_phi_rtilde needs beta != 0");
  if (s < 1) throw DomainError("lerch_phi_rtilde needs s >= 1", s);
  detail::require_geometric_domain(z_in);
  const long wp = spec.working_precision();
  const V z = z_in.with_precision(wp);
  const V one_minus = make_value<V>(1, wp) - z;
  const V w = -z / one_minus;
  V factor = make_value<V>(1, wp) / one_minus;
  std::vector<T> beta_pow(detail::ix(s + 1));
  for (long e = 0; e <= s; ++e) beta_pow[detail::ix(e)] = p.beta.pow(e);
  std::vector<T> h(detail::ix(s));  // H_j^(1..s-1) (last slot unused)
  T b(1);
  SeriesAccumulator<V> acc(spec, make_value<V>(0, wp));
  for (long j = 0;; ++j) {
    if (j > 0) {
      const T f = p.at(j);
      if (f.is_zero()) throw DomainError("lerch_phi_rtilde: alpha*j+beta vanishes", j);
      b *= p.alpha * T(Rational(j)) / f;
      T inv = T(1) / f;
      T pw = inv;
      for (long r = 1; r <= s - 1; ++r) {
        h[detail::ix(r - 1)] += pw;
        pw *= inv;
      }
    }
    const auto rt = rtilde_sequence(s, h);
    T weight;
    for (long m = 0; m <= s - 1; ++m) weight += rt[detail::ix(m + 1)] / beta_pow[detail::ix(s - m)];
    const V term = to_value(b * weight, wp) * factor;
    if (acc.add(j, term)) break;
    factor *= w;
  }
  return require_converged(acc.result(), "lerch_phi_rtilde");
}

/// G^(j)(z) for a generating function G(z) = sum g_n z^n.
template <class V>
struct DerivativeProvider {
  std::string name;
  std::function<V(long j, const V& z)> fn;
};

/// sum_{j>=1} <k+2,j>* z^j G^(j)(z) = sum_{n>=1} g_n z^n/(alpha n + beta)^k.
template <class T>
SeriesResult<value_t<T>> derivative_weighted_transform(long k, const BasicParams<T>& p, const value_t<T>& z_in,
                                                       const DerivativeProvider<value_t<T>>& provider,
                                                       const EvalSpec& spec) {
  using V = value_t<T>;
  if (k < 1) throw DomainError("derivative_weighted_transform needs k >= 1", k);
  const long wp = spec.working_precision();
  const V z = z_in.with_precision(wp);
  SeriesAccumulator<V> acc(spec, make_value<V>(0, wp));
  const StarTable<T> table(p);
  V zpow = z;
  for (long j = 1;; ++j) {
    const V term = to_value(table.entry(k + 2, j), wp) * zpow * provider.fn(j, z);
    if (acc.add(j, term)) break;
    zpow *= z;
  }
  return require_converged(acc.result(), "derivative_weighted_transform(" + provider.name + ")");
}

/// D^j of -log(1-z)/(1-z): (H_j - log(1-z)) j!/(1-z)^(j+1). Needs z < 1.
BigFloat harmonic_ogf_derivative(long j, const BigFloat& z);
DerivativeProvider<BigFloat> harmonic_ogf_provider();
/// D^j of 1/(1-z): j!/(1-z)^(j+1).
DerivativeProvider<BigFloat> geometric_provider();

/// Derivatives of sum_{k>=0} zeta(2k) z^k = -(pi sqrt z/2) cot(pi sqrt z),
/// 0 < z < 1, with zeta(0) = -1/2. The sum is split as
///   j!/(1-z)^(j+1) + sum_{k>=max(j,1)} (zeta(2k)-1) k!/(k-j)! z^(k-j)  (- 3/2 when j = 0)
/// and zeta(2k)-1 is cached per instance.
class ZetaEvenGf {
 public:
  explicit ZetaEvenGf(long prec);
  long precision() const noexcept { return prec_; }
  SeriesResult<BigFloat> derivative(long j, const BigFloat& z) const;
  /// zeta(2k) - 1, k >= 1.
  BigFloat zeta_even_minus_one(long k) const;
  DerivativeProvider<BigFloat> provider() const;

 private:
  struct Cache;
  long prec_;
  std::shared_ptr<Cache> cache_;
};

SeriesResult<BigFloat> zeta_even_gf_derivative(long j, const BigFloat& z, const EvalSpec& spec);
/// -(pi sqrt z/2) cot(pi sqrt z)
BigFloat zeta_even_gf_closed(const BigFloat& z);

enum class TruncatedKind { power, harmonic_ogf, harmonic_egf, double_sum };

/// Both sides of a truncated [w^u] identity, exactly:
///  power:        sum_{n<=u} z^n/f(n)^k        vs [w^u] sum_j <k+2,j>* j! (wz)^j/((1-wz)^(j+1)(1-w))
///  harmonic_ogf: sum_{n<=u} H_n^(k) z^n       vs [w^u] sum_j <k+2,j>* j! (wz)^j/((1-w)(1-wz)^(j+2))
///  harmonic_egf: sum_{n<=u} H_n^(k) z^n/n!    vs [w^u] sum_j <k+2,j>* (wz)^j e^(wz)(j+1+wz)/((j+1)(1-w))
///  double_sum:   sum_{n<=u} sum_{m<=n} t^m z^n/f(m)^k
///                vs [w^u] sum_j <k+2,j>* j! (twz)^j/((1-w)(1-wz)(1-twz)^(j+1))
/// with j = 1..u+u0.
template <class T>
std::pair<T, T> truncated_identity_check(TruncatedKind which, long u, long u0, long k, const BasicParams<T>& p,
                                         const T& z, const std::optional<T>& t = std::nullopt) {
  using S = FormalSeries<T>;
  if (u < 1) throw DomainError("truncated identity needs u >= 1", u);
  if (u0 < 0) throw DomainError("truncated identity needs u0 >= 0", u0);
  const StarTable<T> table(p);
  const S one = S::constant(T(1), u);
  const S w = S::monomial(T(1), 1, u);
  const S wz = w * z;
  const S inv_1mw = S::geometric(T(1), u);
  const S inv_1mwz = S::geometric(z, u);
  T lhs;
  S rhs(u);
  switch (which) {
    case TruncatedKind::power: {
      T zp(1);
      for (long n = 1; n <= u; ++n) {
        zp *= z;
        lhs += zp / p.at(n).pow(k);
      }
      for (long j = 1; j <= u + u0; ++j) {
        rhs += wz.pow(j) * inv_1mwz.pow(j + 1) * inv_1mw * table.scaled(k + 2, j);
      }
      break;
    }
    case TruncatedKind::harmonic_ogf: {
      T zp(1);
      for (long n = 1; n <= u; ++n) {
        zp *= z;
        lhs += hz_number(n, k, p) * zp;
      }
      for (long j = 1; j <= u + u0; ++j) {
        rhs += wz.pow(j) * inv_1mwz.pow(j + 2) * inv_1mw * table.scaled(k + 2, j);
      }
      break;
    }
    case TruncatedKind::harmonic_egf: {
      T zp(1);
      for (long n = 1; n <= u; ++n) {
        zp *= z;
        lhs += hz_number(n, k, p) * zp / T(factorial(n));
      }
      const S ewz = S::exponential(z, u);
      for (long j = 1; j <= u + u0; ++j) {
        const S poly = one * T(Rational(j + 1)) + wz;
        rhs += wz.pow(j) * ewz * poly * inv_1mw * (table.entry(k + 2, j) / T(Rational(j + 1)));
      }
      break;
    }
    case TruncatedKind::double_sum: {
      if (!t) throw DomainError("double_sum identity needs t");
      for (long n = 1; n <= u; ++n) {
        T inner;
        T tp(1);
        for (long m = 1; m <= n; ++m) {
          tp *= *t;
          inner += tp / p.at(m).pow(k);
        }
        lhs += inner * z.pow(n);
      }
      const S twz = wz * *t;
      const S inv_1mtwz = S::geometric(z * *t, u);
      for (long j = 1; j <= u + u0; ++j) {
        rhs += twz.pow(j) * inv_1mtwz.pow(j + 1) * inv_1mwz * inv_1mw * table.scaled(k + 2, j);
      }
      break;
    }
  }
  return {lhs, rhs[u]};
}

/// sum_{n>=0} f(n)^k z^n = sum_{j=0..k} rs2(k,j) j! z^j/(1-z)^(j+1), exact.
template <class T>
T reverse_s2_transform(long k, const T& z, const BasicParams<T>& p) {
  if (z == T(1)) throw DomainError("reverse_s2_transform needs z != 1");
  T sum;
  const T inv = T(1) / (T(1) - z);
  for (long j = 0; j <= k; ++j) sum += reverse_s2(k, j, p) * T(factorial(j)) * z.pow(j) * inv.pow(j + 1);
  return sum;
}

/// Floating version; requires |z| < 1 (where the left side converges).
template <class T>
value_t<T> reverse_s2_transform(long k, const value_t<T>& z_in, const BasicParams<T>& p, const EvalSpec& spec) {
  using V = value_t<T>;
  const long wp = spec.working_precision();
  if (!(magnitude(z_in) < BigFloat(1L, wp))) throw DomainError("reverse_s2_transform needs |z| < 1");
  const V z = z_in.with_precision(wp);
  const V inv = make_value<V>(1, wp) / (make_value<V>(1, wp) - z);
  V sum = make_value<V>(0, wp);
  V zp = make_value<V>(1, wp);
  V ip = inv;
  for (long j = 0; j <= k; ++j) {
    sum += to_value(reverse_s2(k, j, p) * T(factorial(j)), wp) * zp * ip;
    zp *= z;
    ip *= inv;
  }
  return sum;
}

/// sum_{j=0..n} f(j)^k z^j against sum_{j=0..k} rs2(k,j) z^j D^j[(1-z^(n+1))/(1-z)],
/// the derivative taken on the polynomial 1 + z + ... + z^n.
template <class T>
std::pair<T, T> reverse_s2_finite(long k, long n, const T& z, const BasicParams<T>& p) {
  if (z == T(1)) throw DomainError("reverse_s2_finite needs z != 1");
  T lhs;
  T zp(1);
  for (long j = 0; j <= n; ++j) {
    lhs += (k == 0 ? T(1) : p.at(j).pow(k)) * zp;
    zp *= z;
  }
  std::vector<T> poly(detail::ix(n + 1), T(1));
  T rhs;
  for (long j = 0; j <= k; ++j) {
    // evaluate the current derivative at z (Horner)
    T val;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) val = val * z + *it;
    rhs += reverse_s2(k, j, p) * z.pow(j) * val;
    // differentiate
    std::vector<T> next(poly.size() > 1 ? poly.size() - 1 : 1);
    for (std::size_t i = 1; i < poly.size(); ++i) next[i - 1] = poly[i] * T(Rational(static_cast<long>(i)));
    if (poly.size() == 1) next[0] = T();
    poly = std::move(next);
  }
  return {lhs, rhs};
}

}  // namespace zetaforge
