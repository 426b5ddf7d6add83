#include <algorithm>
#include <set>

#include "json.hpp"
#include "test_util.hpp"
#include "zetaforge/catalog.hpp"
#include "zetaforge/elementary.hpp"
#include "zetaforge/reference.hpp"

using namespace zetaforge;

namespace {

bool listed(const std::string& id) {
  const auto all = list_identities();
  return std::any_of(all.begin(), all.end(), [&](const IdentityInfo& i) { return i.id == id; });
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry contents") {
  for (const char* id : {"beta1", "beta2", "beta3", "bbp_pi_sqrt3", "bbp_log_2", "bbp_log_3", "ahz_zeta2", "ahz_zeta3",
                         "ahz_zeta4", "chi1@1/2", "chi3@1/3", "euler_alt_1", "euler_alt_3", "euler_alt_funceq",
                         "polygamma_s2@1/3", "polygamma_s3@2/5", "polygamma_funceq@1/2", "quad_s1", "quad_s2",
                         "quad_s3", "trig_csc@1/3", "trig_sec@1/5", "zeta3_cot", "exotic_a1", "exotic_a2", "hn2_ogf",
                         "pi2_12_deg2", "zeta5_bbp", "fib_arctan@1/2", "fib_arctan@1/5", "central_binom_zeta3",
                         "central_binom_asin@1/4"}) {
    CAPTURE(id);
    CHECK(listed(id));
  }
  const auto all = list_identities();
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  std::set<std::string> ids;
  for (const auto& i : all) ids.insert(i.id);
  CHECK(ids.size() == all.size());
  CHECK(find_identity("zeta5_bbp").tier == Tier::optional);
  CHECK(find_identity("central_binom_zeta3").tier == Tier::optional);
  CHECK(find_identity("beta1").tier == Tier::required);
  CHECK_THROWS_AS(find_identity("no_such_id"), UnknownIdentity);
  CHECK_THROWS_AS(evaluate_identity("no_such_id"), UnknownIdentity);
}

TEST_CASE("tier names") {
  CHECK(parse_tier("required") == Tier::required);
  CHECK(parse_tier("optional") == Tier::optional);
  CHECK_THROWS_AS(parse_tier("mandatory"), ParseError);
  CHECK(to_string(Status::truncated) == "truncated");
}

TEST_CASE("tolerances") {
  for (const Identity& e : registry()) {
    for (long p : {64L, 128L, 192L, 256L, 512L}) {
      CAPTURE(e.id);
      CHECK(scaled_tolerance(e, p) >= BigFloat::pow2(-(p - 16), 64));
    }
    CHECK(e.tolerance == scaled_tolerance(e, e.default_spec.precision_bits));
  }
  const Identity& b = find_identity("beta1");
  CHECK(scaled_tolerance(b, 128) == b.registered_tolerance);
  CHECK(scaled_tolerance(b, 192) < testutil::bf("1e-45"));
  // below the registration precision the registered value is kept
  const Identity& z5 = find_identity("zeta5_bbp");
  CHECK(scaled_tolerance(z5, 192) == z5.registered_tolerance.with_precision(64));
}

TEST_CASE("beta1 against an independent partial sum") {
  const Report r = evaluate_identity("beta1");
  CHECK(r.status == Status::pass);
  CHECK(r.abs_err < testutil::bf("1e-30"));
  CHECK(r.terms_used <= 150);
  CHECK(testutil::close(r.lhs, pi(200) / 4L, 36));
  const Params p21(Rational(2), Rational(1));
  BigFloat sum(0L, 200);
  for (long j = 0; j <= 200; ++j) sum += BigFloat(binom_reciprocal(j, p21) / Rational(2).pow(j + 1), 200);
  CHECK(testutil::close(r.rhs.re(), sum, 36));
}

TEST_CASE("ahz_zeta3") {
  const Report r = evaluate_identity("ahz_zeta3");
  CHECK(r.status == Status::pass);
  CHECK(testutil::close(r.lhs, zeta(3, 200) * 13L / 18L, 36));
  REQUIRE(r.cross_err.has_value());
  CHECK(*r.cross_err < testutil::bf("1e-25"));
}

TEST_CASE("quad_s1 against its defining weights") {
  const Report r = evaluate_identity("quad_s1");
  CHECK(r.status == Status::pass);
  const BigFloat pv = pi(200);
  CHECK(testutil::close(r.lhs, (1L + pv * csch(pv)) / 2L, 36));
  const ComplexParams pp(ComplexRational(1), ComplexRational::i());
  const ComplexParams pm(ComplexRational(1), -ComplexRational::i());
  BigComplex sum = BigComplex::zero(200);
  for (long j = 0; j <= 200; ++j) {
    const ComplexRational w = (binom_reciprocal(j, pp) + binom_reciprocal(j, pm)) / ComplexRational(Rational(2).pow(j + 2));
    sum += BigComplex(w, 200);
  }
  CHECK(testutil::close(r.rhs, sum, 36));
  CHECK(r.rhs.im().abs() < testutil::bf("1e-40"));
}

TEST_CASE("every required identity passes at defaults") {
  const auto reports = evaluate_all(Tier::required);
  const auto listed_ids = list_identities();
  CHECK(reports.size() == static_cast<std::size_t>(std::count_if(listed_ids.begin(), listed_ids.end(), [](const auto& i) {
          return i.tier == Tier::required;
        })));
  for (const Report& r : reports) {
    CAPTURE(r.id);
    CAPTURE(r.note);
    CHECK(r.status == Status::pass);
    CHECK(r.abs_err < r.tolerance);
    CHECK(r.terms_used <= 3 * 500);
    if (r.cross_err) CHECK(*r.cross_err < r.tolerance);
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("optional tier reports") {
  const auto reports = evaluate_all(Tier::optional);
  CHECK(reports.size() == 5);
  for (const Report& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status != Status::fail);
  }
}

TEST_CASE("precision 192") {
  const auto reports = evaluate_all(Tier::required, EvalSpec(192, 800));
  for (const Report& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status == Status::pass);
    CHECK(r.precision_bits == 192);
    CHECK(r.abs_err < testutil::bf("1e-45"));
  }
}

TEST_CASE("truncation is reported, not thrown") {
  const Report r = evaluate_identity("beta1", EvalSpec(128, 20));
  CHECK(r.status == Status::truncated);
  CHECK_FALSE(r.note.empty());
  nlohmann::json j = nlohmann::json::parse(report_json(r));
  CHECK(j["status"] == "truncated");
}

TEST_CASE("JSON schema") {
  const Report r = evaluate_identity("beta2");
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "lhs", "rhs", "abs_err", "rel_err", "terms_used", "precision_bits",
                                         "status"});
  CHECK(j["id"] == "beta2");
  CHECK(j["lhs"].is_string());
  CHECK(j["terms_used"].is_number_integer());
  CHECK(j["precision_bits"] == 128);
  CHECK(j["status"] == "pass");
  // output digits follow the precision
  const std::string lhs = j["lhs"];
  CHECK(lhs == "0.915965594177219015054603514932384111");
  const auto arr = nlohmann::json::parse(reports_json({r, r}));
  CHECK(arr.is_array());
  CHECK(arr.size() == 2);
}

}  // TEST_SUITE
