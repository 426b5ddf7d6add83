#include "zetaforge/stirling1.hpp"

#include <string>

namespace zetaforge {

namespace {

const Rational kZero;

std::size_t idx(long i) { return static_cast<std::size_t>(i); }

}  // namespace

Triangle::Triangle(long n_max, Params p) : params_(std::move(p)) {
  if (n_max < 0) throw DomainError("triangle needs n_max >= 0", n_max);
  rows_.resize(idx(n_max + 1));
  rows_[0] = {Rational(1)};
  for (long n = 1; n <= n_max; ++n) {
    // row 1 is the bare factor x, so its multiplier is 0
    const Rational mult = n == 1 ? Rational(0) : params_.at(n) - params_.alpha;
    auto& row = rows_[idx(n)];
    const auto& prev = rows_[idx(n - 1)];
    row.assign(idx(n + 1), Rational(0));
    for (long k = 0; k <= n; ++k) {
      if (k < n) row[idx(k)] = mult * prev[idx(k)];
      if (k > 0) row[idx(k)] += prev[idx(k - 1)];
    }
  }
}

const Rational& Triangle::entry(long n, long k) const {
  if (n < 0 || n > n_max()) throw DomainError("triangle row out of range", n);
  if (k < 0 || k > n) return kZero;
  return rows_[idx(n)][idx(k)];
}

const std::vector<Rational>& Triangle::row(long n) const {
  if (n < 0 || n > n_max()) throw DomainError("triangle row out of range", n);
  return rows_[idx(n)];
}

Triangle build_triangle(long n_max, const Params& p) { return Triangle(n_max, p); }

Rational triangle_entry_by_product(long n, long k, const Params& p) {
  if (n < 1 || k < 1 || k > n) throw DomainError("product oracle needs 1 <= k <= n");
  std::vector<Rational> poly{Rational(0), Rational(1)};  // x
  for (long j = 1; j <= n - 1; ++j) {
    const Rational c = p.at(j);
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += c * poly[i];
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  return poly[idx(k)];
}

Rational column_via_harmonics(long n, long k, const Params& p) {
  const Rational f = hz_factorial(n, p);
  const Rational h1 = hz_number(n, 1, p);
  switch (k) {
    case 2:
      return f * h1;
    case 3:
      return f / Rational(2) * (h1 * h1 - hz_number(n, 2, p));
    case 4: {
      const Rational h2 = hz_number(n, 2, p);
      const Rational h3 = hz_number(n, 3, p);
      return f / Rational(6) * (h1 * h1 * h1 - Rational(3) * h1 * h2 + Rational(2) * h3);
    }
    default:
      throw DomainError("column_via_harmonics supports k = 2, 3, 4", k);
  }
}

std::vector<Rational> complete_bell(const std::vector<Rational>& x, long n) {
  // Y_{m+1} = sum_{i=0..m} C(m,i) Y_{m-i} x_{i+1}
  std::vector<Rational> y(idx(n + 1));
  y[0] = Rational(1);
  for (long m = 0; m < n; ++m) {
    Rational acc;
    for (long i = 0; i <= m; ++i) acc += binomial(m, i) * y[idx(m - i)] * x[idx(i)];
    y[idx(m + 1)] = std::move(acc);
  }
  return y;
}

Rational column_via_bell(long n, long k, const Params& p) {
  if (k < 1) throw DomainError("column_via_bell needs k >= 1", k);
  std::vector<Rational> x;
  for (long i = 1; i <= k - 1; ++i) x.push_back(-factorial(i - 1) * hz_number(n, i, p));
  const auto y = complete_bell(x, k - 1);
  Rational r = hz_factorial(n, p) * y[idx(k - 1)] / factorial(k - 1);
  return (k - 1) % 2 == 0 ? r : -r;
}

Rational harmonic_via_inversion(long n, long k, const Params& p) {
  const Triangle t(n + 1, p);
  const Rational& e1 = t.entry(n + 1, 1);
  const Rational& e2 = t.entry(n + 1, 2);
  const Rational& e3 = t.entry(n + 1, 3);
  const Rational& e4 = t.entry(n + 1, 4);
  const Rational& e5 = t.entry(n + 1, 5);
  const Rational f = hz_factorial(n, p);
  switch (k) {
    case 2:
      return (e2 * e2 - Rational(2) * e1 * e3) / f.pow(2);
    case 3:
      return (e2.pow(3) - Rational(3) * e1 * e2 * e3 + Rational(3) * e1 * e1 * e4) / f.pow(3);
    case 4:
      return (e2.pow(4) - Rational(4) * e1 * e2 * e2 * e3 + Rational(2) * e1 * e1 * e3 * e3 -
              Rational(4) * e1.pow(3) * e5 + Rational(4) * e1 * e1 * e2 * e4) /
             f.pow(4);
    default:
      throw DomainError("harmonic_via_inversion supports k = 2, 3, 4", k);
  }
}

HRecurrenceForms h_recurrence_forms(long n, long order, const Params& p) {
  if (order < 2) throw DomainError("recurrence forms need order >= 2", order);
  const Triangle t(n + 2, p);
  auto c = [&](long row, long k) { return t.entry(row, k); };
  auto sgn = [](long e) { return Rational(e % 2 == 0 ? 1 : -1); };
  const Rational fn = hz_factorial(n, p);
  const Rational fn1 = hz_factorial(n + 1, p);
  const Rational next = p.at(n + 1);  // alpha n + alpha + beta
  const long q = order;

  HRecurrenceForms out;
  for (long j = 1; j < q; ++j) out.h_n += c(n + 1, q + 1 - j) * sgn(q + 1 - j) * hz_number(n, j, p) / fn;
  out.h_n += c(n + 1, q + 1) * Rational(q) * sgn(q + 1) / fn;

  const Rational hq = hz_number(n, q, p);
  out.h_next_first = hq + c(n + 1, q) * sgn(q + 1) / fn1;
  for (long j = 1; j < q; ++j) out.h_next_first += c(n + 2, q + 1 - j) * sgn(q + 1 - j) / (next.pow(j) * fn1);

  out.h_next_second = hq + next.pow(-(q - 1)) + sgn(q - 1) / fn1 * (c(n + 1, q) + c(n + 1, q - 1)) +
                      c(n + 2, q) * sgn(q) / (next * fn1);
  for (long j = 0; j <= q - 3; ++j) {
    out.h_next_second += c(n + 2, j + 2) * sgn(j + 1) * (next - Rational(1)) / (next.pow(q - 1 - j) * fn1);
  }
  return out;
}

}  // namespace zetaforge
