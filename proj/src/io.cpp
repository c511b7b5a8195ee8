#include "slicelab/io.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace slicelab {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = strip(line);
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::uint64_t parse_count(std::string_view text, std::string_view key) {
  std::uint64_t value = 0;
  text = strip(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError,
                "bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << std::fixed << x;
  return out.str();
}

Json monomial_to_json(const Monomial& m) { return Json(m.exponents()); }

Monomial monomial_from_json(const Json& j) {
  return Monomial(j.get<std::vector<std::uint32_t>>());
}

}  // namespace

EquationFile parse_equation_file(std::string_view text) {
  std::optional<std::string> q_spec;
  std::optional<std::string> modulus;
  std::optional<std::uint64_t> r, k, d;
  std::vector<std::string_view> coeff_lines;
  for (auto line : lines_of(text)) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      coeff_lines.push_back(line);
      continue;
    }
    const auto key = strip(line.substr(0, eq));
    const auto value = strip(line.substr(eq + 1));
    if (key == "q") {
      q_spec = std::string(value);
    } else if (key == "modulus") {
      modulus = std::string(value);
    } else if (key == "r") {
      r = parse_count(value, key);
    } else if (key == "k") {
      k = parse_count(value, key);
    } else if (key == "d") {
      d = parse_count(value, key);
    } else {
      throw Error(ErrorKind::ParseError, "unknown key '" + std::string(key) + "' in equation file");
    }
  }
  if (!q_spec || !r || !k) {
    throw Error(ErrorKind::ParseError, "equation file must set q, r and k");
  }
  Field field = modulus ? parse_field_spec(*q_spec, *modulus) : parse_field_spec(*q_spec);
  if (coeff_lines.size() != *k) {
    throw Error(ErrorKind::ParseError, "equation file declares k=" + std::to_string(*k) +
                                           " but lists " + std::to_string(coeff_lines.size()) +
                                           " coefficient lines");
  }
  std::vector<UniPoly> coeffs;
  for (auto line : coeff_lines) coeffs.push_back(parse_unipoly(line, field));

  EquationSpec spec;
  spec.k = *k;
  spec.r = static_cast<unsigned>(*r);
  for (const auto& a : coeffs) spec.d = std::max(spec.d, a.degree().value_or(0));
  if (d) spec.d = *d;
  spec.coeffs = std::move(coeffs);
  spec.validate(field);
  return EquationFile{std::move(field), std::move(spec)};
}

std::string format_equation_file(const Field& field, const EquationSpec& eq) {
  std::ostringstream out;
  out << "q=" << field.characteristic() << '^' << field.degree() << '\n';
  if (field.degree() > 1) {
    out << "modulus=";
    for (std::size_t i = 0; i < field.modulus().size(); ++i) {
      out << (i ? "," : "") << field.modulus()[i];
    }
    out << '\n';
  }
  out << "r=" << eq.r << "\nk=" << eq.k << "\nd=" << eq.d << '\n';
  for (const auto& a : eq.coeffs) out << format_unipoly(a) << '\n';
  return out.str();
}

std::vector<UniPoly> parse_coefficient_list(std::string_view text, const Field& field) {
  std::vector<UniPoly> out;
  while (true) {
    const auto semi = text.find(';');
    out.push_back(parse_unipoly(strip(text.substr(0, semi)), field));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

PolySet parse_polyset_file(std::string_view text, const Field& field) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "set file is empty");
  const std::string_view header = lines.front();
  const auto npos = header.find("n=");
  if (!header.starts_with("q=") || npos == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "set file header must look like 'q=3 n=1'");
  }
  const Field declared = parse_field_spec(strip(header.substr(0, npos)));
  if (declared.order() != field.order()) {
    throw Error(ErrorKind::ParseError, "set file is over F_" + std::to_string(declared.order()) +
                                           " but the equation is over F_" +
                                           std::to_string(field.order()));
  }
  const std::size_t n = parse_count(header.substr(npos + 2), "n");
  std::vector<UniPoly> members;
  for (std::size_t i = 1; i < lines.size(); ++i) members.push_back(parse_unipoly(lines[i], field));
  return PolySet(n, std::move(members));
}

std::string format_polyset_file(const PolySet& set, const Field& field) {
  std::ostringstream out;
  out << "q=" << field.order() << " n=" << set.n() << '\n';
  for (const auto& f : set.members()) out << format_unipoly(f) << '\n';
  return out.str();
}

std::string format_tuple(std::span<const UniPoly> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += format_unipoly(tuple[i]);
  }
  return out + ")";
}

std::string format_set(const PolySet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += format_unipoly(set.members()[i]);
  }
  return out + "}";
}

Json multipoly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({monomial_to_json(m), c.code()}));
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const Json& j, const Field& field) {
  try {
    MultiPoly p(j.at("nvars").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
      p.add_term(monomial_from_json(term.at(0)), field.element(term.at(1).get<std::uint32_t>()),
                 field);
    }
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed polynomial: ") + e.what());
  }
}

Json bound_report_to_json(const BoundReport& rep) {
  Json j{
      {"q", rep.q},
      {"r", rep.r},
      {"k", rep.k},
      {"d", rep.d},
      {"n", rep.n},
      {"epsilon", format_rational(rep.epsilon)},
      {"epsilon_value", to_double(rep.epsilon)},
      {"c", rep.c_exponent},
      {"C", rep.C_constant.str()},
      {"logq_C", rep.logq_C},
      {"m", rep.m},
      {"l", rep.l},
      {"logq_bound", rep.logq_bound},
      {"bound_value", rep.bound_value ? Json(*rep.bound_value) : Json(nullptr)},
      {"applicable", rep.applicable()},
      {"flags",
       {{"k_ge_2r2_plus_1", rep.enough_variables},
        {"n_ge_4_d_plus_1_r", rep.n_large_enough},
        {"ml_over_k_le_half_minus_eps_n", rep.proposition_holds}}},
      {"note",
       "Hoeffding factor exp(-n*eps^2/2) as stated; the standard inequality gives the "
       "stronger exp(-2*n*eps^2)"},
  };
  return j;
}

std::string bound_report_to_text(const BoundReport& rep) {
  std::ostringstream out;
  out << "instance: q=" << rep.q << " r=" << rep.r << " k=" << rep.k << " d=" << rep.d
      << " n=" << rep.n << '\n';
  out << "status: " << (rep.applicable() ? "applicable" : "inapplicable (k < 2r^2+1)") << '\n';
  out << "epsilon: " << format_rational(rep.epsilon) << " = " << fixed(to_double(rep.epsilon), 9)
      << '\n';
  out << "c: " << fixed(rep.c_exponent, 9) << '\n';
  out << "C: q^" << rep.logq_C << " = " << rep.C_constant.str() << '\n';
  out << "m: " << rep.m << "  l: " << rep.l << '\n';
  out << "log_q bound (k*C*q^(c*n)): " << fixed(rep.logq_bound, 9) << '\n';
  if (rep.bound_value) out << "bound: " << fixed(*rep.bound_value, 3) << '\n';
  out << "flag k>=2r^2+1: " << (rep.enough_variables ? "true" : "false") << '\n';
  out << "flag n>=4(d+1)r: " << (rep.n_large_enough ? "true" : "false") << '\n';
  out << "flag ml/k<=(1/2-eps)n: " << (rep.proposition_holds ? "true" : "false") << '\n';
  out << "note: Hoeffding factor exp(-n*eps^2/2) as stated; the standard inequality gives "
         "exp(-2*n*eps^2)\n";
  return out.str();
}

std::string bound_csv_header() { return "q,r,k,d,n,epsilon,c,logq_bound,flags"; }

std::string bound_report_to_csv_row(const BoundReport& rep) {
  std::ostringstream out;
  out << rep.q << ',' << rep.r << ',' << rep.k << ',' << rep.d << ',' << rep.n << ','
      << format_rational(rep.epsilon) << ',' << fixed(rep.c_exponent, 12) << ','
      << fixed(rep.logq_bound, 9) << ',' << (rep.enough_variables ? 'T' : 'F')
      << (rep.n_large_enough ? 'T' : 'F') << (rep.proposition_holds ? 'T' : 'F');
  return out.str();
}

Json solution_report_to_json(const SolutionReport& report) {
  Json j{{"status", report.status == SolutionStatus::Free ? "free" : "witness"},
         {"tuples_examined", report.tuples_examined}};
  if (report.witness) {
    Json w = Json::array();
    for (const auto& f : *report.witness) w.push_back(format_unipoly(f));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string solution_report_to_text(const SolutionReport& report) {
  if (report.status == SolutionStatus::Free) {
    return "free (" + std::to_string(report.tuples_examined) + " tuples examined)\n";
  }
  return "witness " + format_tuple(*report.witness) + " (" +
         std::to_string(report.tuples_examined) + " tuples examined)\n";
}

CoverCertificate certify_equation(const Field& field, const EquationSpec& eq, std::size_t n,
                                  VerifyOptions options, const Budget& budget) {
  CoverCertificate cert;
  cert.field = field;
  cert.eq = eq;
  cert.n = n;
  cert.k = eq.k;
  const PolyMap map = build_equation_map(eq, n, field, budget);
  cert.m = map.m();
  cert.degree = map.degree;
  cert.indicator = indicator_poly(map, field, budget);
  const Rational threshold = pigeonhole_threshold(field.order(), map.m(), map.degree, eq.k);
  cert.cover = build_cover(cert.indicator, eq.k, n, threshold, field);
  cert.size_bound = BigInt(eq.k) * exact_monomial_count(n, threshold, field.order());

  std::uint64_t domain = 1;
  bool fits = true;
  for (std::size_t i = 0; i < eq.k * n && fits; ++i) {
    if (domain > budget.max_points / field.order()) fits = false;
    domain *= field.order();
  }
  options.mode = fits ? VerifyMode::Exhaustive : VerifyMode::Sampled;
  cert.verdict = verify_cover(cert.indicator, cert.cover, field, options, budget);
  return cert;
}

CoverVerdict recheck_certificate(const CoverCertificate& cert, VerifyOptions options,
                                 const Budget& budget) {
  const std::size_t nvars = cert.k * cert.n;
  if (cert.indicator.nvars() != nvars || cert.cover.k != cert.k || cert.cover.n != cert.n) {
    throw Error(ErrorKind::DimensionMismatch, "certificate dimensions are inconsistent");
  }
  CoverVerdict failed;
  failed.pass = false;
  failed.mode = options.mode;
  for (const auto& slot : cert.cover.slots) {
    for (const auto& [p, cofactor] : slot) {
      if (p.nvars() != cert.n || cofactor.nvars() != nvars - cert.n ||
          Rational(static_cast<std::int64_t>(p.total_degree())) > cert.cover.threshold) {
        return failed;
      }
      for (auto e : p.exponents()) {
        if (e >= cert.field.order()) return failed;
      }
    }
  }
  if (cert.eq) {
    const PolyMap map = build_equation_map(*cert.eq, cert.n, cert.field, budget);
    if (map.m() != cert.m || map.degree != cert.degree ||
        pigeonhole_threshold(cert.field.order(), map.m(), map.degree, cert.k) !=
            cert.cover.threshold) {
      return failed;
    }
    if (!(indicator_poly(map, cert.field, budget) == cert.indicator)) return failed;
  }
  return verify_cover(cert.indicator, cert.cover, cert.field, options, budget);
}

Json certificate_to_json(const CoverCertificate& cert) {
  Json field{{"p", cert.field.characteristic()},
             {"e", cert.field.degree()},
             {"q", cert.field.order()},
             {"modulus", cert.field.modulus()}};
  Json slots = Json::array();
  for (std::size_t j = 0; j < cert.cover.slots.size(); ++j) {
    Json entries = Json::array();
    for (const auto& [p, cofactor] : cert.cover.slots[j]) {
      entries.push_back(Json{{"monomial", monomial_to_json(p)},
                             {"cofactor", multipoly_to_json(cofactor)}});
    }
    slots.push_back(std::move(entries));
  }
  Json out{
      {"field", std::move(field)},
      {"n", cert.n},
      {"k", cert.k},
      {"m", cert.m},
      {"degree", cert.degree},
      {"threshold", format_rational(cert.cover.threshold)},
      {"indicator", multipoly_to_json(cert.indicator)},
      {"slots", std::move(slots)},
      {"size", cert.cover.size()},
      {"size_bound", cert.size_bound.str()},
      {"verification",
       {{"mode", cert.verdict.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled"},
        {"points_checked", cert.verdict.points_checked},
        {"verdict", cert.verdict.pass ? "pass" : "fail"}}},
  };
  if (cert.eq) {
    Json coeffs = Json::array();
    for (const auto& a : cert.eq->coeffs) coeffs.push_back(format_unipoly(a));
    out["equation"] = Json{{"r", cert.eq->r}, {"k", cert.eq->k}, {"d", cert.eq->d},
                           {"coeffs", std::move(coeffs)}};
  }
  if (cert.verdict.witness) {
    std::vector<std::uint32_t> w;
    for (auto x : *cert.verdict.witness) w.push_back(x.code());
    out["verification"]["witness"] = w;
  }
  return out;
}

CoverCertificate certificate_from_json(const Json& j) {
  try {
    CoverCertificate cert;
    const auto& f = j.at("field");
    cert.field = Field::build(f.at("p").get<std::uint32_t>(), f.at("e").get<std::uint32_t>(),
                              f.at("e").get<std::uint32_t>() > 1
                                  ? std::optional(f.at("modulus").get<std::vector<std::uint32_t>>())
                                  : std::nullopt);
    cert.n = j.at("n").get<std::size_t>();
    cert.k = j.at("k").get<std::size_t>();
    cert.m = j.at("m").get<std::size_t>();
    cert.degree = j.at("degree").get<std::uint64_t>();
    cert.indicator = multipoly_from_json(j.at("indicator"), cert.field);
    cert.cover.k = cert.k;
    cert.cover.n = cert.n;
    cert.cover.threshold = parse_rational(j.at("threshold").get<std::string>());
    for (const auto& entries : j.at("slots")) {
      std::map<Monomial, MultiPoly> slot;
      for (const auto& entry : entries) {
        slot.emplace(monomial_from_json(entry.at("monomial")),
                     multipoly_from_json(entry.at("cofactor"), cert.field));
      }
      cert.cover.slots.push_back(std::move(slot));
    }
    if (cert.cover.slots.size() != cert.k) {
      throw Error(ErrorKind::ParseError, "certificate lists the wrong number of slots");
    }
    cert.size_bound = BigInt(j.at("size_bound").get<std::string>());
    if (j.contains("equation")) {
      const auto& e = j.at("equation");
      EquationSpec eq;
      eq.r = e.at("r").get<unsigned>();
      eq.k = e.at("k").get<std::size_t>();
      eq.d = e.at("d").get<std::size_t>();
      for (const auto& a : e.at("coeffs")) {
        eq.coeffs.push_back(parse_unipoly(a.get<std::string>(), cert.field));
      }
      eq.validate(cert.field);
      cert.eq = std::move(eq);
    }
    const auto& v = j.at("verification");
    cert.verdict.mode =
        v.at("mode").get<std::string>() == "sampled" ? VerifyMode::Sampled : VerifyMode::Exhaustive;
    cert.verdict.points_checked = v.at("points_checked").get<std::uint64_t>();
    cert.verdict.pass = v.at("verdict").get<std::string>() == "pass";
    if (v.contains("witness")) {
      std::vector<FieldElement> w;
      for (auto c : v.at("witness").get<std::vector<std::uint32_t>>()) {
        w.push_back(cert.field.element(c));
      }
      cert.verdict.witness = std::move(w);
    }
    return cert;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

std::string certificate_to_text(const CoverCertificate& cert) {
  std::ostringstream out;
  out << "field: " << cert.field.describe() << '\n';
  if (cert.eq) {
    out << "equation: r=" << cert.eq->r << " k=" << cert.eq->k << " d=" << cert.eq->d
        << " a=";
    for (std::size_t i = 0; i < cert.eq->coeffs.size(); ++i) {
      out << (i ? ";" : "") << format_unipoly(cert.eq->coeffs[i]);
    }
    out << '\n';
  }
  out << "n=" << cert.n << " k=" << cert.k << " m=" << cert.m << " degree=" << cert.degree
      << '\n';
  out << "threshold: " << format_rational(cert.cover.threshold) << '\n';
  out << "indicator terms: " << cert.indicator.term_count() << '\n';
  for (std::size_t j = 0; j < cert.cover.slots.size(); ++j) {
    out << "slot " << j + 1 << ": " << cert.cover.slots[j].size() << " monomials\n";
    for (const auto& [p, cofactor] : cert.cover.slots[j]) {
      out << "  [";
      for (std::size_t i = 0; i < p.nvars(); ++i) out << (i ? " " : "") << p[i];
      out << "] cofactor terms=" << cofactor.term_count() << '\n';
    }
  }
  out << "size: " << cert.cover.size() << " (bound k*|M| = " << cert.size_bound.str() << ")\n";
  out << "verification: "
      << (cert.verdict.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled") << ", "
      << cert.verdict.points_checked << " points, " << (cert.verdict.pass ? "pass" : "FAIL")
      << '\n';
  return out.str();
}

}  // namespace slicelab
