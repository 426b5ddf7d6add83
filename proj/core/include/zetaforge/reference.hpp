#pragma once

#include <functional>

#include "zetaforge/bigfloat.hpp"
#include "zetaforge/rational.hpp"

// Reference values used as oracles: alternating-series acceleration and the
// zeta-type constants derived from it. None of these go through the
// coefficient transforms, so they validate the transforms independently.
namespace zetaforge {

/// sum_{k>=0} (-1)^k a(k) by the Cohen-Villegas-Zagier weights. `a` is
/// called with the working precision; it should be a smooth, eventually
/// monotone sequence. `scale_bits` is log2 of max |a(k)| (for the term count).
BigFloat cvz_alternating(const std::function<BigFloat(long k, long wp)>& a, long prec,
                         long scale_bits = 0);

/// Riemann zeta at an integer s >= 2.
BigFloat zeta(long s, long prec);
/// zeta(s) - 1 with full relative precision, s >= 2.
BigFloat zeta_minus_one(long s, long prec);
/// Dirichlet beta sum_{n>=0} (-1)^n/(2n+1)^s, s >= 1.
BigFloat dirichlet_beta(long s, long prec);
BigFloat catalan(long prec);
/// sum_{k>=0} (-1)^k/(k+z)^s for rational z > 0, s >= 1.
BigFloat alternating_hurwitz(long s, const Rational& z, long prec);

}  // namespace zetaforge
