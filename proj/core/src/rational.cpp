#include "zetaforge/rational.hpp"

#include <cctype>
#include <ostream>

#include "zetaforge/complex_rational.hpp"
#include "zetaforge/errors.hpp"
#include "zetaforge/exactnum.hpp"

namespace zetaforge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r;
  r.get_num() = num;
  r.get_den() = den;  // already coprime
  return Rational(std::move(r));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer", n);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

// ---------------------------------------------------------------------------
// ComplexRational

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

ComplexRational ComplexRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of complex zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  if (o.im_.is_zero()) {
    if (o.re_.is_zero()) throw DomainError("complex division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ComplexRational ComplexRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  ComplexRational result(1);
  ComplexRational base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string ComplexRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out;
  if (!re_.is_zero()) out = re_.str();
  if (im_.sign() > 0 && !out.empty()) out += "+";
  out += im_.str() + "*i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.str(); }

namespace {

// Position of the sign separating real and imaginary parts, skipping a
// leading sign.
std::size_t split_point(std::string_view s) {
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') return i;
  }
  return std::string_view::npos;
}

Rational parse_imag_coefficient(std::string_view s) {
  // s has the trailing "i" / "*i" removed.
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  return Rational::parse(s);
}

}  // namespace

ComplexRational ComplexRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return ComplexRational(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  const std::size_t cut = split_point(body);
  if (cut == std::string_view::npos) return {Rational(0), parse_imag_coefficient(body)};
  return {Rational::parse(body.substr(0, cut)), parse_imag_coefficient(body.substr(cut))};
}

// ---------------------------------------------------------------------------

Rational f_harmonic(long n, long r, const std::function<Rational(long)>& f) {
  if (n < 0) throw DomainError("f_harmonic needs n >= 0", n);
  Rational sum;
  for (long k = 1; k <= n; ++k) {
    const Rational v = f(k);
    if (v.is_zero()) throw DomainError("f_harmonic: f vanishes at k=" + std::to_string(k), k);
    sum += v.pow(-r);
  }
  return sum;
}

}  // namespace zetaforge
