#include "slicelab/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "slicelab/error.hpp"

namespace slicelab {
namespace {

using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
PrimePoly mod_monic(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    trim(f);
  }
  return f;
}

PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& g,
                  std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return mod_monic(std::move(prod), g, p);
}

PrimePoly digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  PrimePoly rep(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    rep[i] = code % p;
    code /= p;
  }
  return rep;
}

std::uint32_t undigits(const PrimePoly& rep, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = rep.size(); i-- > 0;) code = code * p + rep[i];
  return code;
}

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError,
                "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::uint32_t> parse_coefficient_csv(std::string_view text) {
  std::vector<std::uint32_t> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_uint(strip(text.substr(0, comma)), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p,
                                                          std::uint32_t e) {
  struct Entry {
    std::uint32_t p, e;
    std::vector<std::uint32_t> modulus;
  };
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},           // t^2 + t + 1
      {2, 3, {1, 1, 0, 1}},        // t^3 + t + 1
      {2, 4, {1, 1, 0, 0, 1}},     // t^4 + t + 1
      {2, 5, {1, 0, 1, 0, 0, 1}},  // t^5 + t^2 + 1
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},
      {3, 2, {1, 0, 1}},           // t^2 + 1
      {3, 3, {1, 2, 0, 1}},        // t^3 + 2t + 1
      {5, 2, {2, 0, 1}},           // t^2 + 2
      {7, 2, {1, 0, 1}},           // t^2 + 1
  };
  if (e == 1 && is_prime(p)) return std::vector<std::uint32_t>{0, 1};
  for (const auto& entry : table) {
    if (entry.p == p && entry.e == e) return entry.modulus;
  }
  return std::nullopt;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  PrimePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // A reducible f has a monic factor of degree <= deg/2.
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      PrimePoly g = digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(dd));
      g.push_back(1);
      if (mod_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::build(std::uint32_t p, std::uint32_t e,
                   std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrimeP, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::UnsupportedSize,
                  "field order " + std::to_string(p) + "^" + std::to_string(e) +
                      " exceeds the supported cap " + std::to_string(kMaxOrder));
    }
  }

  Field field;
  field.p_ = p;
  field.e_ = e;
  field.q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    field.modulus_ = {0, 1};
  } else {
    if (!modulus) {
      modulus = builtin_modulus(p, e);
      if (!modulus) {
        throw Error(ErrorKind::UnsupportedSize,
                    "no built-in modulus for q=" + std::to_string(q));
      }
    }
    auto& mod = *modulus;
    const bool shaped = mod.size() == e + 1 && mod.back() == 1 &&
                        std::all_of(mod.begin(), mod.end(), [p](auto c) { return c < p; });
    if (!shaped || !is_irreducible_mod_p(mod, p)) {
      throw Error(ErrorKind::ReducibleModulus,
                  "modulus is not a monic irreducible polynomial of degree " +
                      std::to_string(e) + " over F_" + std::to_string(p));
    }
    field.modulus_ = mod;
  }

  const std::uint32_t n = field.q_;
  field.add_.resize(n * n);
  field.mul_.resize(n * n);
  field.neg_.resize(n);
  field.inv_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const PrimePoly ra = digits(a, p, e);
    PrimePoly rn(e);
    for (std::uint32_t i = 0; i < e; ++i) rn[i] = (p - ra[i]) % p;
    field.neg_[a] = undigits(rn, p);
    for (std::uint32_t b = 0; b < n; ++b) {
      const PrimePoly rb = digits(b, p, e);
      PrimePoly rs(e);
      for (std::uint32_t i = 0; i < e; ++i) rs[i] = (ra[i] + rb[i]) % p;
      field.add_[a * n + b] = undigits(rs, p);
      PrimePoly ta = ra, tb = rb;
      trim(ta);
      trim(tb);
      PrimePoly rm = mul_mod(ta, tb, field.modulus_, p);
      rm.resize(e, 0);
      field.mul_[a * n + b] = undigits(rm, p);
    }
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = 1; b < n; ++b) {
      if (field.mul_[a * n + b] == 1) {
        field.inv_[a] = b;
        break;
      }
    }
  }
  return field;
}

Field Field::of_order(std::uint32_t q) {
  const auto pe = prime_power(q);
  if (!pe) {
    throw Error(ErrorKind::NonPrimeP, "q must be a prime power >= 2 (got " + std::to_string(q) + ")");
  }
  return build(pe->first, pe->second);
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) {
    throw Error(ErrorKind::InvalidArgument, "element code " + std::to_string(code) +
                                                " out of range for q=" + std::to_string(q_));
  }
  return FieldElement{code};
}

FieldElement Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(p_);
  return FieldElement{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(c);
  return out;
}

std::vector<std::uint32_t> Field::coordinates(FieldElement x) const {
  return digits(x.code(), p_, e_);
}

FieldElement Field::from_coordinates(const std::vector<std::uint32_t>& rep) const {
  if (rep.size() != e_) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  }
  for (auto c : rep) {
    if (c >= p_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  }
  return FieldElement{undigits(rep, p_)};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  return FieldElement{inv_[a.code()]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "q=" << p_ << '^' << e_;
  if (e_ > 1) {
    out << " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  }
  return out.str();
}

Field parse_field_spec(std::string_view spec, std::optional<std::string_view> modulus) {
  spec = strip(spec);
  std::optional<std::string_view> inline_modulus;
  if (const auto pos = spec.find("modulus="); pos != std::string_view::npos) {
    inline_modulus = strip(spec.substr(pos + 8));
    spec = strip(spec.substr(0, pos));
  }
  if (spec.starts_with("q=")) spec.remove_prefix(2);
  spec = strip(spec);

  std::uint32_t p = 0;
  std::uint32_t e = 0;
  if (const auto caret = spec.find('^'); caret != std::string_view::npos) {
    p = parse_uint(strip(spec.substr(0, caret)), "field characteristic");
    e = parse_uint(strip(spec.substr(caret + 1)), "extension degree");
    if (!is_prime(p)) {
      throw Error(ErrorKind::NonPrimeP, "q must be a prime power >= 2 (characteristic " +
                                            std::to_string(p) + " is not prime)");
    }
  } else {
    const std::uint32_t q = parse_uint(spec, "field order");
    const auto pe = prime_power(q);
    if (!pe) {
      throw Error(ErrorKind::NonPrimeP,
                  "q must be a prime power >= 2 (got " + std::to_string(q) + ")");
    }
    std::tie(p, e) = *pe;
  }

  const auto chosen = modulus ? modulus : inline_modulus;
  if (chosen && !strip(*chosen).empty()) {
    return Field::build(p, e, parse_coefficient_csv(strip(*chosen)));
  }
  return Field::build(p, e);
}

}  // namespace slicelab
