#pragma once

#include <vector>

#include "zetaforge/exactnum.hpp"

namespace zetaforge {

/// First-kind triangle [n,k]_{alpha,beta}, 0 <= k <= n <= n_max.
/// Row 0 is 1, row 1 is x; for n >= 2
///   [n,k] = (alpha n + beta - alpha) [n-1,k] + [n-1,k-1].
class Triangle {
 public:
  Triangle(long n_max, Params p);

  long n_max() const noexcept { return static_cast<long>(rows_.size()) - 1; }
  const Params& params() const noexcept { return params_; }
  /// Zero outside 0 <= k <= n; DomainError when n > n_max.
  const Rational& entry(long n, long k) const;
  const std::vector<Rational>& row(long n) const;

 private:
  Params params_;
  std::vector<std::vector<Rational>> rows_;
};

Triangle build_triangle(long n_max, const Params& p);

/// [x^k] x * prod_{j=1..n-1} (x + alpha j + beta), by polynomial products.
Rational triangle_entry_by_product(long n, long k, const Params& p);

/// Closed forms of [n+1,k] for k = 2, 3, 4 through H_n^(r).
Rational column_via_harmonics(long n, long k, const Params& p);

/// Complete Bell polynomials Y_0..Y_n at (x_1, ..., x_n); x[0] is x_1.
std::vector<Rational> complete_bell(const std::vector<Rational>& x, long n);

/// [n+1,k] = n!_{a,b} (-1)^(k-1)/(k-1)! Y_{k-1}(-0! H^(1), -1! H^(2), ...).
Rational column_via_bell(long n, long k, const Params& p);

/// H_n^(k) for k = 2, 3, 4 from products of entries of row n+1.
Rational harmonic_via_inversion(long n, long k, const Params& p);

/// The three harmonic-number recurrences through the triangle, evaluated at
/// (n, order): one expression for H_n^(order), two for H_{n+1}^(order).
struct HRecurrenceForms {
  Rational h_n;
  Rational h_next_first;
  Rational h_next_second;
};
HRecurrenceForms h_recurrence_forms(long n, long order, const Params& p);

}  // namespace zetaforge
