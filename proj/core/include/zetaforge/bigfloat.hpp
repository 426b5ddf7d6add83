#pragma once

#include <algorithm>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

#include "zetaforge/complex_rational.hpp"
#include "zetaforge/errors.hpp"
#include "zetaforge/rational.hpp"

namespace zetaforge {

inline constexpr long kDefaultPrecision = 128;
inline constexpr long kGuardBits = 32;

/// Default precision in bits: ZETAFORGE_PRECISION when set to a positive
/// integer, otherwise kDefaultPrecision.
long default_precision();

class BigFloat;

template <class U>
concept BigFloatOperand =
    std::same_as<U, BigFloat> || std::same_as<U, Rational> || std::integral<U>;

/// Binary floating value owning an mpfr_t. Each value carries its own
/// precision; binary operations produce a result at the larger operand
/// precision, round to nearest.
class BigFloat {
 public:
  BigFloat() : BigFloat(0L, kDefaultPrecision) {}
  BigFloat(long value, long prec);
  BigFloat(const Rational& value, long prec);  // correctly rounded
  BigFloat(const mpz_class& value, long prec);
  static BigFloat zero(long prec) { return BigFloat(0L, prec); }
  static BigFloat from_double(double value, long prec);
  /// Decimal or scientific notation ("1.25", "-3e-7"); ParseError otherwise.
  static BigFloat parse(std::string_view text, long prec);
  /// 2^exponent, exact.
  static BigFloat pow2(long exponent, long prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded (or exactly widened) to `prec` bits.
  BigFloat with_precision(long prec) const;

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const noexcept;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigFloat operator-() const;
  BigFloat abs() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator+=(long o);
  BigFloat& operator-=(long o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);
  BigFloat& operator+=(int o) { return *this += static_cast<long>(o); }
  BigFloat& operator-=(int o) { return *this -= static_cast<long>(o); }
  BigFloat& operator*=(int o) { return *this *= static_cast<long>(o); }
  BigFloat& operator/=(int o) { return *this /= static_cast<long>(o); }
  BigFloat& operator+=(const Rational& o) { return *this += BigFloat(o, precision()); }
  BigFloat& operator-=(const Rational& o) { return *this -= BigFloat(o, precision()); }
  BigFloat& operator*=(const Rational& o) { return *this *= BigFloat(o, precision()); }
  BigFloat& operator/=(const Rational& o) { return *this /= BigFloat(o, precision()); }
  /// Multiply by 2^e exactly.
  BigFloat& ldexp(long e);

  template <BigFloatOperand U>
  friend BigFloat operator+(BigFloat a, const U& b) { return a += b; }
  template <BigFloatOperand U>
  friend BigFloat operator-(BigFloat a, const U& b) { return a -= b; }
  template <BigFloatOperand U>
  friend BigFloat operator*(BigFloat a, const U& b) { return a *= b; }
  template <BigFloatOperand U>
  friend BigFloat operator/(BigFloat a, const U& b) { return a /= b; }
  friend BigFloat operator+(long a, BigFloat b) { return b += a; }
  friend BigFloat operator*(long a, BigFloat b) { return b *= a; }
  friend BigFloat operator-(long a, const BigFloat& b);
  friend BigFloat operator/(long a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  /// Integer power by repeated squaring (negative exponents invert).
  BigFloat pow(long exponent) const;
  BigFloat sqrt() const;
  BigFloat square() const { return *this * *this; }

  /// Scientific decimal with `digits` significant digits.
  std::string str(int digits) const;
  /// Digits matching the precision: floor(prec*log10 2) - 2.
  std::string str() const;

 private:
  struct Uninit {};
  BigFloat(Uninit, long prec) { mpfr_init2(v_, prec); }
  void widen_to(long prec);

  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

/// Decimal digits shown for a given binary precision.
int display_digits(long prec);

/// Complex value re + im*i over BigFloat.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigFloat re) : re_(std::move(re)), im_(BigFloat::zero(re_.precision())) {}  // NOLINT
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(long value, long prec) : re_(value, prec), im_(0L, prec) {}
  BigComplex(const ComplexRational& z, long prec) : re_(z.re(), prec), im_(z.im(), prec) {}
  static BigComplex zero(long prec) { return {BigFloat::zero(prec), BigFloat::zero(prec)}; }

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  long precision() const noexcept { return std::max(re_.precision(), im_.precision()); }
  BigComplex with_precision(long prec) const { return {re_.with_precision(prec), im_.with_precision(prec)}; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  BigComplex conj() const { return {re_, -im_}; }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return norm().sqrt(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(long o);
  BigComplex& operator/=(long o);
  BigComplex& ldexp(long e);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
  friend BigComplex operator*(long a, BigComplex b) { return b *= a; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  BigComplex pow(long exponent) const;

  std::string str(int digits) const;
  std::string str() const { return str(display_digits(precision())); }

 private:
  BigFloat re_;
  BigFloat im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

inline BigFloat magnitude(const BigFloat& x) { return x.abs(); }
inline BigFloat magnitude(const BigComplex& z) { return z.abs(); }
inline BigFloat real_part(const BigFloat& x) { return x; }
inline BigFloat real_part(const BigComplex& z) { return z.re(); }

// Exact field -> floating value type.
template <class T>
struct field_traits;
template <>
struct field_traits<Rational> {
  using value_type = BigFloat;
};
template <>
struct field_traits<ComplexRational> {
  using value_type = BigComplex;
};
template <class T>
using value_t = typename field_traits<T>::value_type;

inline BigFloat to_value(const Rational& q, long prec) { return BigFloat(q, prec); }
inline BigComplex to_value(const ComplexRational& z, long prec) { return BigComplex(z, prec); }

// Precision-preserving constructors used by generic code.
inline BigFloat value_from_long(long v, long prec, const BigFloat*) { return BigFloat(v, prec); }
inline BigComplex value_from_long(long v, long prec, const BigComplex*) { return BigComplex(v, prec); }
template <class V>
V make_value(long v, long prec) {
  return value_from_long(v, prec, static_cast<const V*>(nullptr));
}

}  // namespace zetaforge
