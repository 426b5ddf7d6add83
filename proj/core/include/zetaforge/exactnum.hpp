#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetaforge/complex_rational.hpp"
#include "zetaforge/errors.hpp"
#include "zetaforge/rational.hpp"

namespace zetaforge {

/// The pair (alpha, beta) behind f(n) = alpha*n + beta. T is Rational or
/// ComplexRational.
template <class T>
struct BasicParams {
  T alpha;
  T beta;

  BasicParams(T a, T b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  }

  /// alpha*n + beta
  T at(long n) const { return alpha * T(Rational(n)) + beta; }

  std::string str() const { return "(" + alpha.str() + "," + beta.str() + ")"; }

  friend bool operator==(const BasicParams&, const BasicParams&) = default;
};

using Params = BasicParams<Rational>;
using ComplexParams = BasicParams<ComplexRational>;

/// Every term alpha*k + beta for lo <= k <= hi must be nonzero.
template <class T>
void require_nonvanishing(const BasicParams<T>& p, long lo, long hi, const char* what) {
  for (long k = lo; k <= hi; ++k) {
    if (p.at(k).is_zero()) {
      throw DomainError(std::string(what) + ": alpha*k+beta vanishes at k=" + std::to_string(k), k);
    }
  }
}

/// H_n^(r)(alpha,beta) = sum_{k=1..n} (alpha k + beta)^-r.
template <class T>
T hz_number(long n, long r, const BasicParams<T>& p) {
  if (n < 0) throw DomainError("hz_number needs n >= 0", n);
  T sum;
  for (long k = 1; k <= n; ++k) {
    const T f = p.at(k);
    if (f.is_zero()) throw DomainError("hz_number: zero denominator at k=" + std::to_string(k), k);
    sum += f.pow(-r);
  }
  return sum;
}

/// Prefix table H_0^(r), ..., H_n^(r).
template <class T>
std::vector<T> hz_number_prefix(long n, long r, const BasicParams<T>& p) {
  std::vector<T> out(static_cast<std::size_t>(n + 1));
  for (long k = 1; k <= n; ++k) {
    const T f = p.at(k);
    if (f.is_zero()) throw DomainError("hz_number: zero denominator at k=" + std::to_string(k), k);
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] + f.pow(-r);
  }
  return out;
}

/// F_n^(r)(f) = sum_{k=1..n} f(k)^-r.
Rational f_harmonic(long n, long r, const std::function<Rational(long)>& f);

/// prod_{j=1..n} (alpha j + beta).
template <class T>
T hz_factorial(long n, const BasicParams<T>& p) {
  if (n < 0) throw DomainError("hz_factorial needs n >= 0", n);
  T prod(1);
  for (long j = 1; j <= n; ++j) prod *= p.at(j);
  return prod;
}

/// C(j + beta/alpha, beta/alpha)^-1 = j! alpha^j / prod_{m=1..j}(alpha m + beta).
template <class T>
T binom_reciprocal(long j, const BasicParams<T>& p) {
  if (j < 0) throw DomainError("binom_reciprocal needs j >= 0", j);
  T r(1);
  for (long m = 1; m <= j; ++m) {
    const T f = p.at(m);
    if (f.is_zero()) throw DomainError("binom_reciprocal: zero factor at m=" + std::to_string(m), m);
    r *= p.alpha * T(Rational(m));
    r /= f;
  }
  return r;
}

/// Ordinary r-order harmonic number sum_{k=1..n} k^-r.
inline Rational harmonic(long n, long r = 1) { return hz_number(n, r, Params(1, 0)); }

}  // namespace zetaforge
