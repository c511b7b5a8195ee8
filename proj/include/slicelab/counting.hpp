#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace slicelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2", "1/36", "0.25" or "2.5e-1" into an exact rational.
/// Throws Error{ParseError}.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);
double to_double(const Rational& x);
/// Floor of a rational as an integer.
std::int64_t floor_of(const Rational& x);

/// Number of exponent vectors (e_1..e_n) with 0 <= e_i <= q-1 and
/// sum e_i <= d, i.e. |M_{d,n}|. Computed by a prefix-sum DP over variables.
/// A negative d gives 0.
BigInt exact_monomial_count(std::uint64_t n, std::int64_t d, std::uint64_t q);
/// Same, with the real degree cap floored.
BigInt exact_monomial_count(std::uint64_t n, const Rational& d, std::uint64_t q);

/// q^n * e^{-n eps^2 / 2}. Throws Error{EpsilonOutOfRange} unless eps in (0, 1/2).
double hoeffding_bound(std::uint64_t n, double epsilon, std::uint64_t q);
/// Natural log of hoeffding_bound: n ln q - n eps^2 / 2.
double log_hoeffding_bound(std::uint64_t n, double epsilon, std::uint64_t q);

/// c(eps, q) = 1 - eps^2 / (2 ln q), the exponent with
/// q^{c n} = q^n e^{-n eps^2 / 2}.
double c_exponent(double epsilon, std::uint64_t q);

/// eps(r) = 1 / (4 (2 r^2 + 1)).
Rational epsilon_of_r(std::uint64_t r);

/// Exact test of m*l/k <= (1/2 - eps) n.
bool proposition_condition(std::int64_t m, std::int64_t l, std::int64_t k, std::int64_t n,
                           const Rational& epsilon);

struct BoundReport {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t n = 0;

  Rational epsilon;
  double c_exponent = 0.0;
  /// C = q^{4(d+1)r}, kept exactly and as its log_q.
  BigInt C_constant;
  std::uint64_t logq_C = 0;
  /// m = (n-1)r + d + 1 and l = r, the parameters fed to the condition.
  std::uint64_t m = 0;
  std::uint64_t l = 0;
  /// log_q(k C q^{c n}).
  double logq_bound = 0.0;
  /// k C q^{c n} when it is below 2^64, else nullopt.
  std::optional<double> bound_value;

  bool enough_variables = false;     // k >= 2 r^2 + 1
  bool n_large_enough = false;       // n >= 4 (d+1) r
  bool proposition_holds = false;    // m l / k <= (1/2 - eps) n
  /// The headline bound only applies when k >= 2 r^2 + 1.
  bool applicable() const { return enough_variables; }
};

/// Throws Error{InvalidArgument} unless q >= 2, k >= 2, r >= 1.
BoundReport theorem_bound(std::uint64_t q, std::uint64_t r, std::uint64_t k, std::uint64_t d,
                          std::uint64_t n);

}  // namespace slicelab
