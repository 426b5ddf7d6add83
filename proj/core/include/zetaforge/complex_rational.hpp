#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "zetaforge/rational.hpp"

namespace zetaforge {

/// Gaussian rational re + im*i with exact field arithmetic.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(long re) : re_(re) {}  // NOLINT
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i", with a and b in "p/q"
  /// form; the imaginary unit may be written "i" or "*i".
  static ComplexRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  ComplexRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  ComplexRational inverse() const;
  ComplexRational pow(long exponent) const;

  ComplexRational operator-() const { return {-re_, -im_}; }
  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

  /// "p/q" when real, otherwise "p/q+r/s*i".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace zetaforge
