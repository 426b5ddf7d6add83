#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "zetaforge/exactnum.hpp"

namespace zetaforge {

namespace detail {

inline std::size_t ix(long i) { return static_cast<std::size_t>(i); }

template <class T>
T signed_unit(long e) {
  return T(Rational(e % 2 == 0 ? 1 : -1));
}

}  // namespace detail

/// <k,j>* = (1/j!) sum_{m=1..j} C(j,m) (-1)^(j-m) (alpha m + beta)^(2-k),
/// straight from the definition. k may be any integer.
template <class T>
T star_coeff(long k, long j, const BasicParams<T>& p) {
  if (j < 0) throw DomainError("star_coeff needs j >= 0", j);
  T sum;
  for (long m = 1; m <= j; ++m) {
    const T f = p.at(m);
    if (f.is_zero() && k > 2) throw DomainError("star_coeff: alpha*m+beta vanishes at m=" + std::to_string(m), m);
    const T term = (k == 2) ? T(1) : f.pow(2 - k);
    sum += T(binomial(j, m)) * detail::signed_unit<T>(j - m) * term;
  }
  return sum / T(factorial(j));
}

/// Same sum with alpha m + beta replaced by f(m).
Rational star_coeff_f(long k, long j, const std::function<Rational(long)>& f);

/// Memoized star coefficients for one parameter pair. Columns are filled by
///   <k+1,j>* = (<k,j>* - alpha <k+1,j-1>*) / (alpha j + beta)   (k >= 2)
///   <k,j>*   = (alpha j + beta) <k+1,j>* + alpha <k+1,j-1>*     (k < 2)
/// from <2,j>* = (-1)^(j+1)/j!. Population is serialized by a mutex.
template <class T>
class StarTable {
 public:
  explicit StarTable(BasicParams<T> p) : params_(std::move(p)) {}

  const BasicParams<T>& params() const noexcept { return params_; }

  T entry(long k, long j) const {
    if (j < 0) throw DomainError("star table needs j >= 0", j);
    std::lock_guard<std::mutex> lock(mu_);
    return column(k, j)[detail::ix(j)];
  }

  /// <k,j>* j!, the weight multiplying z^j/(1-z)^(j+1).
  T scaled(long k, long j) const { return entry(k, j) * T(factorial(j)); }

  /// <k,j>* j! (-1)^(j-1), the normalized form used in coefficient tables.
  T normalized(long k, long j) const { return scaled(k, j) * detail::signed_unit<T>(j - 1); }

 private:
  // Column k filled at least through row j. Caller holds the lock.
  const std::vector<T>& column(long k, long j) const {
    auto& col = cols_[k];
    if (static_cast<long>(col.size()) > j) return col;
    const long from = static_cast<long>(col.size());
    col.resize(detail::ix(j + 1));
    for (long jj = from; jj <= j; ++jj) {
      try {
        col[detail::ix(jj)] = compute(k, jj);
      } catch (...) {
        col.resize(detail::ix(jj));
        throw;
      }
    }
    return col;
  }

  T compute(long k, long j) const {
    if (j == 0) return T();
    if (k == 2) {
      T inv_fact = T(factorial(j)).inverse();
      return j % 2 == 1 ? inv_fact : -inv_fact;
    }
    const T f = params_.at(j);
    if (k > 2) {
      if (f.is_zero()) throw DomainError("star table: alpha*j+beta vanishes at j=" + std::to_string(j), j);
      const T lower = column(k - 1, j)[detail::ix(j)];
      const T left = column(k, j - 1)[detail::ix(j - 1)];
      return (lower - params_.alpha * left) / f;
    }
    const T& upper = column(k + 1, j)[detail::ix(j)];
    const T& upper_left = column(k + 1, j - 1)[detail::ix(j - 1)];
    return f * upper + params_.alpha * upper_left;
  }

  BasicParams<T> params_;
  mutable std::mutex mu_;
  mutable std::map<long, std::vector<T>> cols_;
};

/// <k,j>* == (alpha j + beta) <k+1,j>* + alpha <k+1,j-1>*, all by definition.
template <class T>
bool verify_star_recurrence(long k, long j, const BasicParams<T>& p) {
  if (j < 1) throw DomainError("verify_star_recurrence needs j >= 1", j);
  const T rhs = p.at(j) * star_coeff(k + 1, j, p) + p.alpha * star_coeff(k + 1, j - 1, p);
  return star_coeff(k, j, p) == rhs;
}

/// R~_k(alpha,beta;j) by its defining binomial sum (1 for k = 0, 1).
template <class T>
T rtilde(long k, const BasicParams<T>& p, long j) {
  if (k < 0) throw DomainError("rtilde needs k >= 0", k);
  if (j < 0) throw DomainError("rtilde needs j >= 0", j);
  if (k <= 1) return T(1);
  T sum;
  for (long m = 1; m <= j; ++m) {
    const T f = p.at(m);
    if (f.is_zero()) throw DomainError("rtilde: alpha*m+beta vanishes at m=" + std::to_string(m), m);
    sum += T(binomial(j, m)) * detail::signed_unit<T>(m + 1) * p.alpha * T(Rational(m)) / f.pow(k);
  }
  return sum / binom_reciprocal(j, p);
}

/// R~_0..R~_{m_max} from h[i] = H_j^(i+1):
///   R~_m = sum_{i=0..m-2} R~_{m-1-i} H_j^(i+1) / (m-1),  R~_0 = R~_1 = 1.
template <class T>
std::vector<T> rtilde_sequence(long m_max, const std::vector<T>& h) {
  std::vector<T> r(detail::ix(std::max(m_max, 1L) + 1));
  r[0] = T(1);
  r[1] = T(1);
  for (long m = 2; m <= m_max; ++m) {
    T acc;
    for (long i = 0; i <= m - 2; ++i) acc += r[detail::ix(m - 1 - i)] * h[detail::ix(i)];
    r[detail::ix(m)] = acc / T(Rational(m - 1));
  }
  return r;
}

/// R~_m through the harmonic-number recurrence.
template <class T>
T rtilde_via_recurrence(long m, const BasicParams<T>& p, long j) {
  if (m < 1) throw DomainError("rtilde_via_recurrence needs m >= 1", m);
  std::vector<T> h;
  for (long r = 1; r <= m - 1; ++r) h.push_back(hz_number(j, r, p));
  return rtilde_sequence(m, h)[detail::ix(m)];
}

/// (-1)^(j-1)/(beta^k j!) + sum_{m=0..k-1} B_j (-1)^j R~_{m+1}/(j! beta^(k-m)),
/// which equals <k+2,j>*.
template <class T>
T star_via_rtilde(long k, long j, const BasicParams<T>& p) {
  if (p.beta.is_zero()) throw DomainError("star_via_rtilde divides by beta");
  if (j < 1) throw DomainError("star_via_rtilde needs j >= 1", j);
  const T jf = T(factorial(j));
  T out = detail::signed_unit<T>(j - 1) / (p.beta.pow(k) * jf);
  const T b = binom_reciprocal(j, p) * detail::signed_unit<T>(j) / jf;
  std::vector<T> h;
  for (long r = 1; r <= k; ++r) h.push_back(hz_number(j, r, p));
  const auto rt = rtilde_sequence(k, h);
  for (long m = 0; m <= k - 1; ++m) out += b * rt[detail::ix(m + 1)] / p.beta.pow(k - m);
  return out;
}

/// (alpha n + beta)^-k against sum_{j=0..n} C(n,j) <k+2,j>* j!.
template <class T>
std::pair<T, T> power_sum_identity(long n, long k, const BasicParams<T>& p) {
  const T f = p.at(n);
  if (f.is_zero()) throw DomainError("power_sum_identity: alpha*n+beta vanishes", n);
  const StarTable<T> table(p);
  T rhs;
  for (long j = 0; j <= n; ++j) rhs += T(binomial(n, j)) * table.scaled(k + 2, j);
  return {f.pow(-k), rhs};
}

/// H_n^(k) against sum_{j=0..n} C(n+1,j+1) <k+2,j>* j!.
template <class T>
std::pair<T, T> harmonic_sum_identity(long n, long k, const BasicParams<T>& p) {
  const StarTable<T> table(p);
  T rhs;
  for (long j = 0; j <= n; ++j) rhs += T(binomial(n + 1, j + 1)) * table.scaled(k + 2, j);
  return {hz_number(n, k, p), rhs};
}

/// Both H_n^(k) recurrences implied by the R~ expansion (k >= 3).
template <class T>
bool hk_recurrences(long n, long k, const BasicParams<T>& p) {
  if (p.beta.is_zero()) throw DomainError("hk_recurrences divides by beta");
  if (k < 3) throw DomainError("hk_recurrences needs k >= 3", k);
  const T& b = p.beta;
  T first = hz_number(n, k - 1, p) / b;
  T second = hz_number(n, k - 2, p) / (b * b);
  for (long j = 0; j <= n; ++j) {
    const T w = T(binomial(n + 1, j + 1)) * binom_reciprocal(j, p) * detail::signed_unit<T>(j);
    const T rk = rtilde(k, p, j);
    first += w * rk / b;
    second += w * (rk / b + rtilde(k - 1, p, j) / (b * b));
  }
  const T lhs = hz_number(n, k, p);
  return lhs == first && lhs == second;
}

/// (1/j!) sum_{m=0..j} C(j,m) (-1)^(j-m) (alpha m + beta)^k.
template <class T>
T reverse_s2(long k, long j, const BasicParams<T>& p) {
  if (k < 0 || j < 0) throw DomainError("reverse_s2 needs k, j >= 0");
  T sum;
  for (long m = 0; m <= j; ++m) {
    const T f = p.at(m);
    sum += T(binomial(j, m)) * detail::signed_unit<T>(j - m) * (k == 0 ? T(1) : f.pow(k));
  }
  return sum / T(factorial(j));
}

}  // namespace zetaforge
