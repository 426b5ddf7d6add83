#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaforge/bigfloat.hpp"
#include "zetaforge/seriesengine.hpp"

// Registry of worked identities: each entry pairs an independent oracle
// (closed form or direct/accelerated sum) with a transformed series.
namespace zetaforge {

enum class Tier { required, optional };
enum class Status { pass, fail, truncated };

std::string to_string(Tier t);
std::string to_string(Status s);
/// "required" / "optional"; ParseError otherwise.
Tier parse_tier(const std::string& text);

/// What an rhs closure hands back: the series value, the number of series
/// terms it consumed, and (where the identity has one) a second
/// representation of the same quantity.
struct SeriesValue {
  BigComplex value;
  long terms_used = 0;
  std::optional<BigComplex> alternate;
};

struct Identity {
  std::string id;
  Tier tier = Tier::required;
  std::string description;
  std::function<BigFloat(const EvalSpec&)> lhs_oracle;
  std::function<SeriesValue(const EvalSpec&)> rhs_series;
  EvalSpec default_spec;
  /// Pass threshold at default_spec.precision_bits.
  BigFloat tolerance;
  /// The threshold as registered, and the precision it was stated at.
  BigFloat registered_tolerance;
  long tolerance_precision = 128;
};

struct Report {
  std::string id;
  BigFloat lhs;
  BigComplex rhs;
  BigFloat abs_err;
  BigFloat rel_err;
  long terms_used = 0;
  long precision_bits = 0;
  Status status = Status::fail;
  // not part of the JSON schema
  BigFloat tolerance;
  std::optional<BigFloat> cross_err;  // |alternate - rhs|
  std::string note;
  double seconds = 0.0;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity: " + id) {}
};

struct IdentityInfo {
  std::string id;
  Tier tier;
  std::string description;
};

/// The immutable registry, sorted by id.
const std::vector<Identity>& registry();
std::vector<IdentityInfo> list_identities();
const Identity& find_identity(const std::string& id);

/// Tolerance at precision p for an identity registered at p0:
/// tol * 2^-(p - p0) above p0, tol at or below it, never below 2^-(p - 16).
BigFloat scaled_tolerance(const Identity& id, long precision_bits);

/// The override replaces default_spec wholesale.
Report evaluate_identity(const std::string& id, const std::optional<EvalSpec>& spec = std::nullopt);
/// Every identity in the tier (all tiers when empty), concurrently, ordered by id.
std::vector<Report> evaluate_all(std::optional<Tier> tier, const std::optional<EvalSpec>& spec = std::nullopt);

/// {"id", "lhs", "rhs", "abs_err", "rel_err", "terms_used", "precision_bits", "status"}
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& rs);

}  // namespace zetaforge
