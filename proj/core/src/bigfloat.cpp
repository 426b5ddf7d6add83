#include "zetaforge/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "zetaforge/errors.hpp"

namespace zetaforge {

long default_precision() {
  if (const char* env = std::getenv("ZETAFORGE_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= (1L << 20)) return v;
  }
  return kDefaultPrecision;
}

int display_digits(long prec) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(prec) * std::log10(2.0))) - 2);
}

BigFloat::BigFloat(long value, long prec) : BigFloat(Uninit{}, prec) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, long prec) : BigFloat(Uninit{}, prec) {
  mpfr_set_q(v_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, long prec) : BigFloat(Uninit{}, prec) {
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_double(double value, long prec) {
  BigFloat r(Uninit{}, prec);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(std::string_view text, long prec) {
  BigFloat r(Uninit{}, prec);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("not a decimal number: '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pow2(long exponent, long prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

BigFloat::BigFloat(const BigFloat& o) : BigFloat(Uninit{}, o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(Uninit{}, MPFR_PREC_MIN) { mpfr_swap(v_, o.v_); }

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long prec) const {
  BigFloat r(Uninit{}, prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void BigFloat::widen_to(long prec) {
  if (prec > precision()) mpfr_prec_round(v_, prec, MPFR_RNDN);
}

long BigFloat::exponent() const noexcept {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.is_zero()) throw DomainError("floating division by zero");
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long o) {
  if (o == 0) throw DomainError("floating division by zero");
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::ldexp(long e) {
  mpfr_mul_2si(v_, v_, e, MPFR_RNDN);
  return *this;
}

BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r(BigFloat::Uninit{}, b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(long a, const BigFloat& b) {
  if (b.is_zero()) throw DomainError("floating division by zero");
  BigFloat r(BigFloat::Uninit{}, b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(long exponent) const {
  if (exponent < 0) return 1L / pow(-exponent);
  BigFloat r(Uninit{}, precision());
  mpfr_pow_ui(r.v_, v_, static_cast<unsigned long>(exponent), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw DomainError("square root of negative value");
  BigFloat r(Uninit{}, precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(1, digits), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::str() const { return str(display_digits(precision())); }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

BigFloat abs(const BigFloat& x) { return x.abs(); }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// BigComplex

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat n = o.norm();
  if (n.is_zero()) throw DomainError("complex division by zero");
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator*=(long o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(long o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

BigComplex& BigComplex::ldexp(long e) {
  re_.ldexp(e);
  im_.ldexp(e);
  return *this;
}

BigComplex BigComplex::pow(long exponent) const {
  if (exponent < 0) return BigComplex(1L, precision()) / pow(-exponent);
  BigComplex result(1L, precision());
  BigComplex base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string BigComplex::str(int digits) const {
  // Print as real when the imaginary part is negligible at this precision.
  if (im_.is_zero() || (!re_.is_zero() && im_.exponent() < re_.exponent() - precision() + 4)) {
    return re_.str(digits);
  }
  std::string im = im_.str(digits);
  if (im.front() != '-') im = "+" + im;
  return re_.str(digits) + im + "*i";
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.str(); }

}  // namespace zetaforge
