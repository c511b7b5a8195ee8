#include "slicelab/counting.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "slicelab/error.hpp"

namespace slicelab {
namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "cannot parse integer '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t pow10(std::int64_t k) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / 10) {
      throw Error(ErrorKind::ParseError, "decimal has too many digits");
    }
    out *= 10;
  }
  return out;
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw Error(ErrorKind::EpsilonOutOfRange,
                "epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  std::int64_t exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_int(text.substr(e + 1));
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  std::int64_t frac_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_digits = static_cast<std::int64_t>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "cannot parse number '" + std::string(text) + "'");
  }
  Rational value(parse_int(digits));
  const std::int64_t shift = exponent - frac_digits;
  if (shift >= 0) {
    value *= pow10(shift);
  } else {
    value /= pow10(-shift);
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

std::int64_t floor_of(const Rational& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

BigInt exact_monomial_count(std::uint64_t n, std::int64_t d, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  if (d < 0) return 0;
  const std::uint64_t max_sum = n * (q - 1);
  const std::uint64_t cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(d), max_sum);
  // ways[s] = number of exponent vectors over the variables so far with sum s.
  std::vector<BigInt> ways(cap + 1, 0);
  ways[0] = 1;
  std::vector<BigInt> prefix(cap + 2);
  for (std::uint64_t var = 0; var < n; ++var) {
    prefix[0] = 0;
    for (std::uint64_t s = 0; s <= cap; ++s) prefix[s + 1] = prefix[s] + ways[s];
    for (std::uint64_t s = 0; s <= cap; ++s) {
      const std::uint64_t lo = s >= q - 1 ? s - (q - 1) : 0;
      ways[s] = prefix[s + 1] - prefix[lo];
    }
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

BigInt exact_monomial_count(std::uint64_t n, const Rational& d, std::uint64_t q) {
  return exact_monomial_count(n, floor_of(d), q);
}

double log_hoeffding_bound(std::uint64_t n, double epsilon, std::uint64_t q) {
  require_epsilon(epsilon);
  const auto nn = static_cast<double>(n);
  return nn * std::log(static_cast<double>(q)) - nn * epsilon * epsilon / 2.0;
}

double hoeffding_bound(std::uint64_t n, double epsilon, std::uint64_t q) {
  return std::exp(log_hoeffding_bound(n, epsilon, q));
}

double c_exponent(double epsilon, std::uint64_t q) {
  require_epsilon(epsilon);
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  return 1.0 - epsilon * epsilon / (2.0 * std::log(static_cast<double>(q)));
}

Rational epsilon_of_r(std::uint64_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");
  return Rational(1, 4 * (2 * static_cast<std::int64_t>(r * r) + 1));
}

bool proposition_condition(std::int64_t m, std::int64_t l, std::int64_t k, std::int64_t n,
                           const Rational& epsilon) {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return Rational(m * l, k) <= (Rational(1, 2) - epsilon) * n;
}

BoundReport theorem_bound(std::uint64_t q, std::uint64_t r, std::uint64_t k, std::uint64_t d,
                          std::uint64_t n) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be a prime power >= 2");
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be >= 2");
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");

  BoundReport rep;
  rep.q = q;
  rep.r = r;
  rep.k = k;
  rep.d = d;
  rep.n = n;
  rep.epsilon = epsilon_of_r(r);
  rep.c_exponent = c_exponent(to_double(rep.epsilon), q);
  rep.logq_C = 4 * (d + 1) * r;
  rep.C_constant = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(rep.logq_C));
  rep.m = n >= 1 ? (n - 1) * r + d + 1 : d + 1;
  rep.l = r;

  const double ln_q = std::log(static_cast<double>(q));
  rep.logq_bound = std::log(static_cast<double>(k)) / ln_q + static_cast<double>(rep.logq_C) +
                   rep.c_exponent * static_cast<double>(n);
  if (rep.logq_bound * ln_q < 64.0 * std::log(2.0)) {
    rep.bound_value = std::exp(rep.logq_bound * ln_q);
  }

  rep.enough_variables = k >= 2 * r * r + 1;
  rep.n_large_enough = n >= 4 * (d + 1) * r;
  rep.proposition_holds =
      n >= 1 && proposition_condition(static_cast<std::int64_t>(rep.m), static_cast<std::int64_t>(rep.l),
                                      static_cast<std::int64_t>(k), static_cast<std::int64_t>(n),
                                      rep.epsilon);
  return rep;
}

}  // namespace slicelab
