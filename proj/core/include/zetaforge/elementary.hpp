#pragma once

#include "zetaforge/bigfloat.hpp"

// Elementary functions evaluated by series in this library. Results are
// rounded to the precision of the argument (or `prec` for constants).
namespace zetaforge {

BigFloat pi(long prec);
BigFloat ln2(long prec);

BigFloat exp(const BigFloat& x);
/// Natural logarithm; DomainError for x <= 0.
BigFloat log(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat coth(const BigFloat& x);
BigFloat csch(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);

}  // namespace zetaforge
