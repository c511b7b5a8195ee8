// Command-line front end: bound, count, cover, verify, search.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "slicelab/counting.hpp"
#include "slicelab/encoding.hpp"
#include "slicelab/io.hpp"
#include "slicelab/search.hpp"
#include "slicelab/slicerank.hpp"

namespace {

using namespace slicelab;

constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

enum class Format { Text, Json, Csv };

struct Common {
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = 0;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
  Budget caps() const {
    Budget b = Budget::from_environment();
    if (budget > 0) {
      b.max_evaluations = budget;
      b.max_points = budget;
    }
    return b;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << std::fixed << x;
  return out.str();
}

// "7" or "3:12".
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    const auto lo = std::stoull(text.substr(0, colon));
    const auto hi = std::stoull(text.substr(colon + 1));
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse range '" + text + "'");
  }
}

std::uint32_t require_prime_power(std::uint64_t q) {
  if (!prime_power(q)) {
    throw Error(ErrorKind::InvalidArgument, "q must be a prime power >= 2");
  }
  return static_cast<std::uint32_t>(q);
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
  std::uint64_t q = 0, r = 0, k = 0, d = 0;
  std::string n;
};

int run_bound(const BoundArgs& a, const Common& c) {
  require_prime_power(a.q);
  if (a.r < 1 || a.k < 2) throw Error(ErrorKind::InvalidArgument, "need r >= 1 and k >= 2");
  const auto [lo, hi] = parse_range(a.n);
  std::vector<BoundReport> reports;
  for (std::uint64_t n = lo; n <= hi; ++n) reports.push_back(theorem_bound(a.q, a.r, a.k, a.d, n));

  switch (c.fmt()) {
    case Format::Json: {
      Json out = Json::array();
      for (const auto& rep : reports) out.push_back(bound_report_to_json(rep));
      std::cout << (reports.size() == 1 ? out[0] : out).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << bound_csv_header() << '\n';
      for (const auto& rep : reports) std::cout << bound_report_to_csv_row(rep) << '\n';
      break;
    case Format::Text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << '\n';
        std::cout << bound_report_to_text(reports[i]);
      }
      break;
  }
  return 0;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::uint64_t q = 0;
  std::string n;
  std::string d;
  std::string epsilon;
};

int run_count(const CountArgs& a, const Common& c) {
  require_prime_power(a.q);
  if (a.d.empty() == a.epsilon.empty()) {
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --d and --epsilon");
  }
  const auto [lo, hi] = parse_range(a.n);
  struct Row {
    std::uint64_t n;
    Rational cap;
    std::optional<Rational> eps;
    BigInt exact;
    std::optional<double> bound;
  };
  std::vector<Row> rows;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    Row row{n, 0, std::nullopt, 0, std::nullopt};
    const auto spread = static_cast<std::int64_t>((a.q - 1) * n);
    if (!a.epsilon.empty()) {
      const Rational eps = parse_rational(a.epsilon);
      if (eps <= 0 || eps >= Rational(1, 2)) {
        throw Error(ErrorKind::EpsilonOutOfRange, "epsilon must lie in (0, 1/2)");
      }
      row.eps = eps;
      row.cap = (Rational(1, 2) - eps) * spread;
    } else {
      row.cap = parse_rational(a.d);
      if (row.cap < 0) throw Error(ErrorKind::InvalidArgument, "d must be >= 0");
      if (spread > 0) {
        const Rational eps = Rational(1, 2) - row.cap / spread;
        if (eps > 0 && eps < Rational(1, 2)) row.eps = eps;
      }
    }
    row.exact = exact_monomial_count(n, row.cap, a.q);
    if (row.eps && n >= 1) row.bound = hoeffding_bound(n, to_double(*row.eps), a.q);
    rows.push_back(std::move(row));
  }

  auto ratio = [](const Row& row) -> std::optional<double> {
    if (!row.bound) return std::nullopt;
    return row.exact.convert_to<double>() / *row.bound;
  };

  switch (c.fmt()) {
    case Format::Json: {
      Json out = Json::array();
      for (const auto& row : rows) {
        const auto rt = ratio(row);
        out.push_back(Json{{"q", a.q},
                           {"n", row.n},
                           {"d", floor_of(row.cap)},
                           {"epsilon", row.eps ? Json(format_rational(*row.eps)) : Json(nullptr)},
                           {"exact", row.exact.str()},
                           {"hoeffding", row.bound ? Json(*row.bound) : Json(nullptr)},
                           {"ratio", rt ? Json(*rt) : Json(nullptr)}});
      }
      std::cout << (rows.size() == 1 ? out[0] : out).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "q,n,d,epsilon,exact,hoeffding,ratio\n";
      for (const auto& row : rows) {
        const auto rt = ratio(row);
        std::cout << a.q << ',' << row.n << ',' << floor_of(row.cap) << ','
                  << (row.eps ? format_rational(*row.eps) : "") << ',' << row.exact.str() << ','
                  << (row.bound ? fixed(*row.bound, 6) : "") << ','
                  << (rt ? fixed(*rt, 9) : "") << '\n';
      }
      break;
    case Format::Text:
      for (const auto& row : rows) {
        const auto rt = ratio(row);
        std::cout << "q=" << a.q << " n=" << row.n << " d=" << floor_of(row.cap)
                  << " exact=" << row.exact.str();
        if (row.bound) {
          std::cout << " epsilon=" << format_rational(*row.eps)
                    << " hoeffding=" << fixed(*row.bound, 6) << " ratio=" << fixed(*rt, 9);
        }
        std::cout << '\n';
      }
      break;
  }
  return 0;
}

// ---- cover ---------------------------------------------------------------

struct CoverArgs {
  std::string q;
  std::string modulus;
  std::size_t n = 0;
  unsigned r = 0;
  std::size_t k = 0;
  std::string a;
  std::string eq_file;
  std::optional<std::size_t> d;
  std::uint64_t samples = 1000;
  std::string check;
};

void emit_certificate(const CoverCertificate& cert, Format fmt) {
  switch (fmt) {
    case Format::Json:
      std::cout << certificate_to_json(cert).dump(2) << '\n';
      break;
    case Format::Csv:
      std::cout << "q,n,k,m,degree,threshold,size,size_bound,mode,points,verdict\n"
                << cert.field.order() << ',' << cert.n << ',' << cert.k << ',' << cert.m << ','
                << cert.degree << ',' << format_rational(cert.cover.threshold) << ','
                << cert.cover.size() << ',' << cert.size_bound.str() << ','
                << (cert.verdict.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled")
                << ',' << cert.verdict.points_checked << ','
                << (cert.verdict.pass ? "pass" : "fail") << '\n';
      break;
    case Format::Text:
      std::cout << certificate_to_text(cert);
      break;
  }
}

int run_cover(const CoverArgs& a, const Common& c) {
  const Budget budget = c.caps();
  VerifyOptions options;
  options.samples = a.samples;
  options.seed = c.seed;
  options.threads = c.threads;

  if (!a.check.empty()) {
    const CoverCertificate cert = certificate_from_json(Json::parse(read_file(a.check)));
    const CoverVerdict verdict = recheck_certificate(cert, options, budget);
    if (c.fmt() == Format::Json) {
      std::cout << Json{{"verdict", verdict.pass ? "pass" : "fail"},
                        {"points_checked", verdict.points_checked}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << (verdict.pass ? "pass" : "fail") << " (" << verdict.points_checked
                << " points)\n";
    }
    return verdict.pass ? 0 : 1;
  }

  std::optional<Field> field;
  EquationSpec eq;
  if (!a.eq_file.empty()) {
    auto file = parse_equation_file(read_file(a.eq_file));
    field = std::move(file.field);
    eq = std::move(file.eq);
  } else {
    if (a.q.empty() || a.a.empty() || a.r == 0) {
      throw Error(ErrorKind::InvalidArgument, "cover needs --eq FILE or --q, --r and --a");
    }
    field = a.modulus.empty() ? parse_field_spec(a.q) : parse_field_spec(a.q, a.modulus);
    eq.r = a.r;
    eq.coeffs = parse_coefficient_list(a.a, *field);
    eq.k = eq.coeffs.size();
    for (const auto& poly : eq.coeffs) eq.d = std::max(eq.d, poly.degree().value_or(0));
    if (a.d) eq.d = *a.d;
  }
  if (a.k != 0 && a.k != eq.k) {
    throw Error(ErrorKind::InvalidArgument, "--k " + std::to_string(a.k) + " disagrees with the " +
                                                std::to_string(eq.k) + " coefficients given");
  }
  if (a.n == 0) throw Error(ErrorKind::InvalidArgument, "need --n >= 1");
  eq.validate(*field);
  for (auto slot : eq.zero_coefficient_slots()) {
    std::cerr << "warning: a_" << slot + 1 << " = 0, so f_" << slot + 1 << " is vacuous\n";
  }
  const CoverCertificate cert = certify_equation(*field, eq, a.n, options, budget);
  emit_certificate(cert, c.fmt());
  return cert.verdict.pass ? 0 : 1;
}

// ---- verify / search -----------------------------------------------------

struct VerifyArgs {
  std::string set_file;
  std::string eq_file;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  const auto file = parse_equation_file(read_file(a.eq_file));
  const PolySet set = parse_polyset_file(read_file(a.set_file), file.field);
  SearchOptions options;
  options.threads = c.threads;
  options.seed = c.seed;
  const SolutionReport report = verify_solution_free(set, file.eq, file.field, c.caps(), options);
  switch (c.fmt()) {
    case Format::Json:
      std::cout << solution_report_to_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      std::cout << "status,witness,tuples_examined\n"
                << (report.witness ? "witness" : "free") << ','
                << (report.witness ? format_tuple(*report.witness) : "") << ','
                << report.tuples_examined << '\n';
      break;
    case Format::Text:
      std::cout << solution_report_to_text(report);
      break;
  }
  return 0;
}

struct SearchArgs {
  std::string q;
  std::size_t n = 0;
  std::string eq_file;
  std::string mode = "exhaustive";
};

int run_search(const SearchArgs& a, const Common& c) {
  const auto file = parse_equation_file(read_file(a.eq_file));
  if (!a.q.empty() && parse_field_spec(a.q).order() != file.field.order()) {
    throw Error(ErrorKind::InvalidArgument, "--q disagrees with the equation file");
  }
  if (a.n == 0) throw Error(ErrorKind::InvalidArgument, "need --n >= 1");
  const Budget budget = c.caps();
  SearchOptions options;
  options.threads = c.threads;
  options.seed = c.seed;

  PolySet set;
  std::optional<std::uint64_t> subsets;
  if (a.mode == "exhaustive") {
    const MaxFreeResult result = exhaustive_max_free(a.n, file.eq, file.field, budget, options);
    set = result.witness;
    subsets = result.subsets_examined;
  } else if (a.mode == "greedy") {
    set = greedy_free(a.n, file.eq, file.field, c.seed, budget);
  } else {
    throw Error(ErrorKind::InvalidArgument, "--mode must be exhaustive or greedy");
  }

  switch (c.fmt()) {
    case Format::Json: {
      Json members = Json::array();
      for (const auto& f : set.members()) members.push_back(format_unipoly(f));
      Json out{{"mode", a.mode}, {"size", set.size()}, {"witness", members}, {"n", a.n},
               {"q", file.field.order()}};
      if (subsets) out["subsets_examined"] = *subsets;
      if (a.mode == "greedy") out["seed"] = c.seed;
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "mode,q,n,size,witness\n"
                << a.mode << ',' << file.field.order() << ',' << a.n << ',' << set.size() << ",\""
                << format_set(set) << "\"\n";
      break;
    case Format::Text:
      if (a.mode == "exhaustive") {
        std::cout << "max=" << set.size() << ", witness " << format_set(set) << '\n';
      } else {
        std::cout << "greedy size=" << set.size() << ", set " << format_set(set) << " (seed "
                  << c.seed << ")\n";
      }
      break;
  }
  return 0;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--seed", common.seed, "Seed for all randomness");
  sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--budget", common.budget,
                  std::string("Evaluation/point cap (overrides ") + kBudgetEnvVar + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice-rank laboratory for diagonal equations over F_q[t]"};
  app.require_subcommand(1);
  Common common;

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Report the size bound and its side conditions");
  bound_cmd->add_option("--q", bound.q, "Field order")->required();
  bound_cmd->add_option("--r", bound.r, "Exponent")->required();
  bound_cmd->add_option("--k", bound.k, "Number of variables")->required();
  bound_cmd->add_option("--d", bound.d, "Max coefficient degree")->required();
  bound_cmd->add_option("--n", bound.n, "Degree bound n, or a range lo:hi")->required();
  add_common(bound_cmd, common);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count monomials of bounded degree");
  count_cmd->add_option("--q", count.q, "Field order")->required();
  count_cmd->add_option("--n", count.n, "Number of variables, or a range lo:hi")->required();
  count_cmd->add_option("--d", count.d, "Total degree cap (floored)");
  count_cmd->add_option("--epsilon", count.epsilon, "Cap (q-1) n (1/2 - epsilon)");
  add_common(count_cmd, common);

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Build and verify a slice-rank cover certificate");
  cover_cmd->add_option("--q", cover.q, "Field spec: 9, 3^2 or q=3^2");
  cover_cmd->add_option("--modulus", cover.modulus, "Irreducible modulus c0,c1,...,ce");
  cover_cmd->add_option("--n", cover.n, "Degree bound n");
  cover_cmd->add_option("--r", cover.r, "Exponent");
  cover_cmd->add_option("--k", cover.k, "Number of variables (checked against --a)");
  cover_cmd->add_option("--a", cover.a, "Coefficients, e.g. \"1;1;1\" or \"1 2;2 1;0\"");
  cover_cmd->add_option("--d", cover.d, "Degree bound for the coefficients");
  cover_cmd->add_option("--eq", cover.eq_file, "Equation file");
  cover_cmd->add_option("--samples", cover.samples, "Sample count when not exhaustive");
  cover_cmd->add_option("--check", cover.check, "Re-verify a JSON certificate");
  add_common(cover_cmd, common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify that a set is solution-free");
  verify_cmd->add_option("--set", verify.set_file, "Set file")->required();
  verify_cmd->add_option("--eq", verify.eq_file, "Equation file")->required();
  add_common(verify_cmd, common);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Find large solution-free sets");
  search_cmd->add_option("--q", search.q, "Field order (checked against the equation file)");
  search_cmd->add_option("--n", search.n, "Degree bound n")->required();
  search_cmd->add_option("--eq", search.eq_file, "Equation file")->required();
  search_cmd->add_option("--mode", search.mode, "exhaustive or greedy")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  add_common(search_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (bound_cmd->parsed()) return run_bound(bound, common);
    if (count_cmd->parsed()) return run_count(count, common);
    if (cover_cmd->parsed()) return run_cover(cover, common);
    if (verify_cmd->parsed()) return run_verify(verify, common);
    if (search_cmd->parsed()) return run_search(search, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SizeBudgetExceeded ? kExitBudget : kExitInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
