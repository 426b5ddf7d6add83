#include "zetaforge/seriesengine.hpp"

#include <map>
#include <mutex>

#include "zetaforge/elementary.hpp"
#include "zetaforge/reference.hpp"

namespace zetaforge {

BigFloat EvalSpec::tolerance() const {
  if (tail_tolerance) return *tail_tolerance;
  return BigFloat::pow2(-(precision_bits + 8), working_precision());
}

void EvalSpec::validate() const {
  if (precision_bits < 16) throw DomainError("precision must be at least 16 bits", precision_bits);
  if (max_terms < 1) throw DomainError("max_terms must be >= 1", max_terms);
  if (tail_tolerance && tail_tolerance->sign() <= 0) throw DomainError("tail tolerance must be positive");
}

SeriesResult<BigFloat> exponential_transform(long k, const Params& p, const BigFloat& r, const BigFloat& z,
                                             const EvalSpec& spec) {
  if (k < 1) throw DomainError("exponential_transform needs k >= 1", k);
  const long wp = spec.working_precision();
  const BigFloat x = r.with_precision(wp) * z.with_precision(wp);
  // e^x inside each term so the stopping rule sees true term sizes
  const BigFloat ex = exp(x);
  SeriesAccumulator<BigFloat> acc(spec, BigFloat::zero(wp));
  const StarTable<Rational> table(p);
  BigFloat xp = x * ex;
  for (long j = 1;; ++j) {
    const BigFloat term = BigFloat(table.entry(k + 2, j), wp) * xp;
    if (acc.add(j, term)) break;
    xp *= x;
  }
  return require_converged(acc.result(), "exponential_transform");
}

BigFloat harmonic_ogf_derivative(long j, const BigFloat& z) {
  if (j < 0) throw DomainError("derivative order must be >= 0", j);
  const long prec = z.precision();
  const BigFloat one_minus = 1L - z;
  if (one_minus.sign() <= 0) throw DomainError("harmonic OGF derivative needs z < 1");
  const BigFloat hj(harmonic(j), prec);
  const BigFloat fact(factorial(j), prec);
  return (hj - log(one_minus)) * fact / one_minus.pow(j + 1);
}

DerivativeProvider<BigFloat> harmonic_ogf_provider() {
  return {"harmonic_ogf", [](long j, const BigFloat& z) { return harmonic_ogf_derivative(j, z); }};
}

DerivativeProvider<BigFloat> geometric_provider() {
  return {"geometric", [](long j, const BigFloat& z) {
            const BigFloat one_minus = 1L - z;
            return BigFloat(factorial(j), z.precision()) / one_minus.pow(j + 1);
          }};
}

// ---------------------------------------------------------------------------

struct ZetaEvenGf::Cache {
  std::mutex mu;
  std::vector<BigFloat> values;  // values[k] = zeta(2k) - 1, k >= 1
};

ZetaEvenGf::ZetaEvenGf(long prec) : prec_(prec), cache_(std::make_shared<Cache>()) {}

BigFloat ZetaEvenGf::zeta_even_minus_one(long k) const {
  if (k < 1) throw DomainError("zeta_even_minus_one needs k >= 1", k);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& v = cache_->values;
  while (static_cast<long>(v.size()) <= k) {
    const long kk = static_cast<long>(v.size());
    v.push_back(kk == 0 ? BigFloat::zero(prec_) : zeta_minus_one(2 * kk, prec_));
  }
  return v[static_cast<std::size_t>(k)];
}

SeriesResult<BigFloat> ZetaEvenGf::derivative(long j, const BigFloat& z_in) const {
  if (j < 0) throw DomainError("derivative order must be >= 0", j);
  const BigFloat z = z_in.with_precision(prec_);
  if (z.sign() <= 0 || !(z < BigFloat(1L, prec_))) throw DomainError("zeta-even GF needs 0 < z < 1");
  const BigFloat one_minus = 1L - z;
  BigFloat head = BigFloat(factorial(j), prec_) / one_minus.pow(j + 1);
  if (j == 0) head -= Rational(3, 2);
  // tail: sum_{k>=max(j,1)} (zeta(2k)-1) k!/(k-j)! z^(k-j); terms ~ k^j (z/4)^k
  EvalSpec inner;
  inner.precision_bits = prec_ - kGuardBits;
  inner.max_terms = 100000;
  inner.tail_tolerance = BigFloat::pow2(-(prec_ + 4), prec_);
  SeriesAccumulator<BigFloat> acc(inner, std::move(head));
  const long k0 = std::max(j, 1L);
  BigFloat weight(factorial(k0) / factorial(k0 - j), prec_);
  BigFloat zp = z.pow(k0 - j);
  for (long k = k0;; ++k) {
    const BigFloat term = zeta_even_minus_one(k) * weight * zp;
    // index offset keeps the j >= 8 floor meaningful for the inner loop
    if (acc.add(k - k0, term)) break;
    weight *= k + 1;
    weight /= k + 1 - j;
    zp *= z;
  }
  return require_converged(acc.result(), "zeta_even_gf_derivative");
}

DerivativeProvider<BigFloat> ZetaEvenGf::provider() const {
  ZetaEvenGf self = *this;
  return {"zeta_even_gf", [self](long j, const BigFloat& z) { return self.derivative(j, z).value; }};
}

namespace {

ZetaEvenGf shared_zeta_even(long prec) {
  static std::mutex mu;
  static std::map<long, ZetaEvenGf> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, ZetaEvenGf(prec)).first;
  return it->second;
}

}  // namespace

SeriesResult<BigFloat> zeta_even_gf_derivative(long j, const BigFloat& z, const EvalSpec& spec) {
  return shared_zeta_even(spec.working_precision()).derivative(j, z);
}

BigFloat zeta_even_gf_closed(const BigFloat& z) {
  const long prec = z.precision();
  const long wp = prec + 16;
  const BigFloat x = pi(wp) * z.with_precision(wp).sqrt();
  BigFloat r = -x * cot(x);
  r.ldexp(-1);
  return r.with_precision(prec);
}

}  // namespace zetaforge
