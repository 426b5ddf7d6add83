#include "json.hpp"

#include "zetaforge/catalog.hpp"

namespace zetaforge {

namespace {

std::string decimal(const BigFloat& x, int digits) {
  if (!x.is_finite()) return "nan";
  return x.str(digits);
}

std::string decimal(const BigComplex& z, int digits) {
  if (!z.re().is_finite() || !z.im().is_finite()) return "nan";
  return z.str(digits);
}

nlohmann::ordered_json to_json(const Report& r) {
  const int digits = display_digits(r.precision_bits);
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["lhs"] = decimal(r.lhs, digits);
  j["rhs"] = decimal(r.rhs, digits);
  j["abs_err"] = decimal(r.abs_err, 6);
  j["rel_err"] = decimal(r.rel_err, 6);
  j["terms_used"] = r.terms_used;
  j["precision_bits"] = r.precision_bits;
  j["status"] = to_string(r.status);
  return j;
}

}  // namespace

std::string report_json(const Report& r) { return to_json(r).dump(); }

std::string reports_json(const std::vector<Report>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(2);
}

}  // namespace zetaforge
