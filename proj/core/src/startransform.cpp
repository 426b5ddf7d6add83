#include "zetaforge/startransform.hpp"

#include <string>

namespace zetaforge {

Rational star_coeff_f(long k, long j, const std::function<Rational(long)>& f) {
  if (j < 0) throw DomainError("star_coeff_f needs j >= 0", j);
  Rational sum;
  for (long m = 1; m <= j; ++m) {
    const Rational v = f(m);
    if (v.is_zero()) throw DomainError("star_coeff_f: f vanishes at m=" + std::to_string(m), m);
    const Rational term = (k == 2) ? Rational(1) : v.pow(2 - k);
    sum += binomial(j, m) * Rational((j - m) % 2 == 0 ? 1 : -1) * term;
  }
  return sum / factorial(j);
}

template class StarTable<Rational>;
template class StarTable<ComplexRational>;

}  // namespace zetaforge
