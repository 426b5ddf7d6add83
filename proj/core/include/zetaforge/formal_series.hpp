#pragma once

#include <algorithm>
#include <vector>

#include "zetaforge/errors.hpp"
#include "zetaforge/rational.hpp"

namespace zetaforge {

/// Truncated power series c_0 + c_1 w + ... + c_N w^N over an exact field.
/// Binary operations truncate to the smaller order.
template <class T>
class FormalSeries {
 public:
  explicit FormalSeries(long order = 0) : c_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw DomainError("formal series order must be >= 0", order);
  }
  FormalSeries(std::vector<T> coeffs, long order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order + 1));
  }

  static FormalSeries constant(const T& v, long order) {
    FormalSeries s(order);
    s.c_[0] = v;
    return s;
  }
  /// c w^e
  static FormalSeries monomial(const T& c, long e, long order) {
    FormalSeries s(order);
    if (e <= order) s.c_[static_cast<std::size_t>(e)] = c;
    return s;
  }
  /// 1/(1 - c w)
  static FormalSeries geometric(const T& c, long order) {
    FormalSeries s(order);
    T p(1);
    for (auto& x : s.c_) {
      x = p;
      p *= c;
    }
    return s;
  }
  /// e^(c w)
  static FormalSeries exponential(const T& c, long order) {
    FormalSeries s(order);
    T p(1);
    for (long n = 0; n <= order; ++n) {
      s.c_[static_cast<std::size_t>(n)] = p;
      p *= c;
      p /= T(Rational(n + 1));
    }
    return s;
  }

  long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// [w^n]; zero beyond the order.
  T operator[](long n) const {
    return (n < 0 || n > order()) ? T() : c_[static_cast<std::size_t>(n)];
  }
  void set(long n, T v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }
  const std::vector<T>& coefficients() const noexcept { return c_; }

  FormalSeries truncated(long order) const { return FormalSeries(std::vector<T>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1), order); }

  FormalSeries operator-() const {
    FormalSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    const long n = std::min(a.order(), b.order());
    FormalSeries r(n);
    for (long i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + (-b); }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const long n = std::min(a.order(), b.order());
    FormalSeries r(n);
    for (long i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (long j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend FormalSeries operator*(const FormalSeries& a, const T& s) {
    FormalSeries r(a);
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend FormalSeries operator*(const T& s, const FormalSeries& a) { return a * s; }
  FormalSeries& operator+=(const FormalSeries& o) { return *this = *this + o; }
  FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; the constant term must be nonzero.
  FormalSeries inverse() const {
    if (c_[0].is_zero()) throw DomainError("formal series inverse needs a unit constant term");
    const long n = order();
    FormalSeries r(n);
    const T inv0 = T(1) / c_[0];
    r.c_[0] = inv0;
    for (long k = 1; k <= n; ++k) {
      T acc;
      for (long i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }
  friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) { return a * b.inverse(); }

  FormalSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FormalSeries r = constant(T(1), order());
    FormalSeries base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return r;
  }

  FormalSeries derivative() const {
    FormalSeries r(std::max(0L, order() - 1));
    for (long i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * T(Rational(i));
    return r;
  }
  /// Antiderivative with zero constant term; order grows by one.
  FormalSeries integral() const {
    FormalSeries r(order() + 1);
    for (long i = 0; i <= order(); ++i) r.c_[i + 1] = c_[i] / T(Rational(i + 1));
    return r;
  }

  /// this(g(w)); g must have zero constant term.
  FormalSeries compose(const FormalSeries& g) const {
    if (!g.c_[0].is_zero()) throw DomainError("composition needs a zero constant term");
    const long n = std::min(order(), g.order());
    FormalSeries r(n);
    FormalSeries power = constant(T(1), n);
    const FormalSeries gt = g.truncated(n);
    for (long k = 0; k <= n; ++k) {
      if (!c_[k].is_zero()) r += power * c_[k];
      power *= gt;
    }
    return r;
  }

  /// log of a series with constant term 1.
  FormalSeries log() const {
    if (c_[0] != T(1)) throw DomainError("formal log needs constant term 1");
    if (order() == 0) return FormalSeries(0);
    return (derivative() * truncated(order() - 1).inverse()).integral();
  }
  /// exp of a series with zero constant term.
  FormalSeries exp() const {
    if (!c_[0].is_zero()) throw DomainError("formal exp needs a zero constant term");
    const long n = order();
    FormalSeries r(n);
    r.c_[0] = T(1);
    // r' = f' r
    for (long k = 1; k <= n; ++k) {
      T acc;
      for (long i = 1; i <= k; ++i) acc += T(Rational(i)) * c_[i] * r.c_[k - i];
      r.c_[k] = acc / T(Rational(k));
    }
    return r;
  }
  /// (this)^e for rational e, constant term 1.
  FormalSeries pow(const Rational& e) const { return (log() * T(e)).exp(); }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<T> c_;
};

}  // namespace zetaforge
