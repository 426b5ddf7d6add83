#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaforge/catalog.hpp"
#include "zetaforge/seriesengine.hpp"
#include "zetaforge/startransform.hpp"
#include "zetaforge/stirling1.hpp"

namespace zetaforge::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  long precision_bits = default_precision();
  long max_terms = 500;
  Format format = Format::text;
  std::string tier;
  bool precision_given = false;
  bool terms_given = false;

  EvalSpec spec() const { return EvalSpec(precision_bits, max_terms); }
};

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

int cmd_triangle(const Config& cfg, const std::string& alpha, const std::string& beta, long n, std::ostream& out) {
  const Params p(parse_rational(alpha), parse_rational(beta));
  const Triangle t = build_triangle(n, p);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (long i = 0; i <= n; ++i) {
      for (long k = 0; k <= i; ++k) arr.push_back({{"n", i}, {"k", k}, {"value", t.entry(i, k).str()}});
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"n\\k"};
  for (long k = 0; k <= n; ++k) head.push_back(std::to_string(k));
  rows.push_back(head);
  for (long i = 0; i <= n; ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (long k = 0; k <= n; ++k) row.push_back(t.entry(i, k).str());
    rows.push_back(row);
  }
  out << render_table(rows, cfg.format);
  return 0;
}

int cmd_star_table(const Config& cfg, const std::string& alpha, const std::string& beta, long j_max, long k_max,
                   std::ostream& out) {
  const Params p(parse_rational(alpha), parse_rational(beta));
  const StarTable<Rational> table(p);
  const bool flag = p == Params(2, 1) && j_max >= 2;
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (long j = 0; j <= j_max; ++j) {
      for (long k = 0; k <= k_max; ++k) arr.push_back({{"j", j}, {"k", k}, {"value", table.normalized(k, j).str()}});
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"j\\k"};
  for (long k = 0; k <= k_max; ++k) head.push_back(std::to_string(k));
  rows.push_back(head);
  for (long j = 0; j <= j_max; ++j) {
    std::vector<std::string> row{std::to_string(j)};
    for (long k = 0; k <= k_max; ++k) row.push_back(table.normalized(k, j).str());
    rows.push_back(row);
  }
  out << render_table(rows, cfg.format);
  if (flag && cfg.format == Format::text) {
    out << "note: (j=2, k=0) is -7 from the defining sum\n";
  }
  return 0;
}

std::vector<std::string> report_row(const Report& r) {
  const int digits = display_digits(r.precision_bits);
  auto dec = [](const BigFloat& x, int d) { return x.is_finite() ? x.str(d) : std::string("nan"); };
  const std::string rhs = r.rhs.re().is_finite() ? r.rhs.str(digits) : "nan";
  return {r.id,      to_string(r.status),         dec(r.abs_err, 6), dec(r.rel_err, 6), std::to_string(r.terms_used),
          std::to_string(r.precision_bits), dec(r.lhs, digits), rhs};
}

int print_reports(const Config& cfg, const std::vector<Report>& reports, bool single, std::ostream& out,
                  std::ostream& err) {
  if (cfg.format == Format::json) {
    out << (single ? report_json(reports.front()) : reports_json(reports)) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"id", "status", "abs_err", "rel_err", "terms_used", "precision_bits", "lhs", "rhs"});
    for (const auto& r : reports) rows.push_back(report_row(r));
    out << render_table(rows, cfg.format);
  }
  bool ok = true;
  for (const auto& r : reports) {
    if (r.status != Status::pass) {
      ok = false;
      if (!r.note.empty()) err << r.id << ": " << r.note << "\n";
    }
  }
  return ok ? 0 : kExitFail;
}

int cmd_eval(const Config& cfg, const std::string& id, bool all, bool list, std::ostream& out, std::ostream& err) {
  std::optional<Tier> tier;
  if (!cfg.tier.empty()) tier = parse_tier(cfg.tier);
  if (list) {
    std::vector<std::vector<std::string>> rows{{"id", "tier", "description"}};
    for (const auto& e : list_identities()) {
      if (!tier || e.tier == *tier) rows.push_back({e.id, to_string(e.tier), e.description});
    }
    if (cfg.format == Format::json) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t i = 1; i < rows.size(); ++i) {
        arr.push_back({{"id", rows[i][0]}, {"tier", rows[i][1]}, {"description", rows[i][2]}});
      }
      out << arr.dump(2) << "\n";
    } else {
      out << render_table(rows, cfg.format);
    }
    return 0;
  }
  std::optional<EvalSpec> spec;
  if (cfg.precision_given || cfg.terms_given) {
    spec = cfg.spec();
  }
  if (all) return print_reports(cfg, evaluate_all(tier, spec), false, out, err);
  if (id.empty()) {
    err << "eval: give an identity id, --all or --list\n";
    return kExitUsage;
  }
  find_identity(id);  // UnknownIdentity -> usage error
  return print_reports(cfg, {evaluate_identity(id, spec)}, true, out, err);
}

template <class V>
void print_value(const Config& cfg, const SeriesResult<V>& r, std::ostream& out) {
  const int digits = display_digits(cfg.precision_bits);
  const std::string value = r.value.str(digits);
  const std::string bound = r.bound.str(3);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j{{"value", value},
                             {"bound", bound},
                             {"terms_used", r.terms_used},
                             {"precision_bits", cfg.precision_bits}};
    out << j.dump() << "\n";
    return;
  }
  out << render_table({{"value", "bound", "terms_used"}, {value, bound, std::to_string(r.terms_used)}}, cfg.format);
}

int cmd_phi(const Config& cfg, const std::string& z_text, long s, const std::string& alpha, const std::string& beta,
            std::ostream& out) {
  const ComplexRational z = ComplexRational::parse(z_text);
  const ComplexRational a = ComplexRational::parse(alpha);
  const ComplexRational b = ComplexRational::parse(beta);
  const EvalSpec spec = cfg.spec();
  const long wp = spec.working_precision();
  if (s < 1) throw DomainError("phi needs s >= 1", s);
  if (z.is_real() && a.is_real() && b.is_real()) {
    const auto r = lerch_phi<Rational>(BigFloat(z.re(), wp), s, Params(a.re(), b.re()), spec);
    print_value(cfg, r, out);
  } else {
    const auto r = lerch_phi<ComplexRational>(BigComplex(z, wp), s, ComplexParams(a, b), spec);
    print_value(cfg, r, out);
  }
  return 0;
}

}  // namespace

std::string render_table(const std::vector<std::vector<std::string>>& rows, Format fmt) {
  std::ostringstream os;
  if (fmt == Format::tsv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generalized Stirling tables and zeta-type series transforms"};
  app.require_subcommand(1);
  Config cfg;
  std::string format = "text";
  // ZETAFORGE_PRECISION feeds default_precision(), hence cfg's default
  auto* prec_opt = app.add_option("--precision", cfg.precision_bits, "precision in bits")
                       ->check(CLI::Range(16L, 1L << 20));
  auto* terms_opt = app.add_option("--max-terms", cfg.max_terms, "series term budget")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));

  std::string alpha = "2";
  std::string beta = "1";
  long n = 8;
  auto* tri = app.add_subcommand("triangle", "first-kind triangle [n,k] for (alpha, beta)");
  tri->add_option("--alpha", alpha, "rational alpha");
  tri->add_option("--beta", beta, "rational beta");
  tri->add_option("--n", n, "largest row")->check(CLI::Range(0L, 2000L));

  long j_max = 8;
  long k_max = 6;
  auto* star = app.add_subcommand("star-table", "normalized coefficients <k,j>* j! (-1)^(j-1)");
  star->add_option("--alpha", alpha, "rational alpha");
  star->add_option("--beta", beta, "rational beta");
  star->add_option("--j-max", j_max, "largest j")->check(CLI::Range(0L, 2000L));
  star->add_option("--k-max", k_max, "largest k")->check(CLI::Range(0L, 200L));

  std::string id;
  bool all = false;
  bool list = false;
  auto* ev = app.add_subcommand("eval", "evaluate catalog identities");
  ev->add_option("id", id, "identity id");
  ev->add_flag("--all", all, "evaluate every identity (see --tier)");
  ev->add_flag("--list", list, "list identities");
  ev->add_option("--tier", cfg.tier, "required or optional")->check(CLI::IsMember({"required", "optional"}));

  std::string z_text;
  long s = 1;
  std::string phi_alpha;
  std::string phi_beta;
  auto* phi = app.add_subcommand("phi", "Phi(z, s, alpha, beta) = sum_n z^n/(alpha n + beta)^s");
  phi->add_option("z", z_text, "z (rational or p/q+r/s*i)")->required();
  phi->add_option("s", s, "integer order >= 1")->required();
  phi->add_option("alpha", phi_alpha, "alpha")->required();
  phi->add_option("beta", phi_beta, "beta")->required();

  for (auto* sub : {tri, star, ev, phi}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  cfg.precision_given = prec_opt->count() > 0;
  cfg.terms_given = terms_opt->count() > 0;
  cfg.format = format == "json" ? Format::json : (format == "tsv" ? Format::tsv : Format::text);

  try {
    if (tri->parsed()) return cmd_triangle(cfg, alpha, beta, n, out);
    if (star->parsed()) return cmd_star_table(cfg, alpha, beta, j_max, k_max, out);
    if (ev->parsed()) return cmd_eval(cfg, id, all, list, out, err);
    if (phi->parsed()) return cmd_phi(cfg, z_text, s, phi_alpha, phi_beta, out);
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "truncated: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"zetaforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zetaforge::cli
