#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slicelab/counting.hpp"
#include "slicelab/error.hpp"
#include "support.hpp"

using namespace slicelab;
using namespace testsupport;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("1/36") == Rational(1, 36));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(floor_of(Rational(5, 2)) == 2);
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("monomial count examples") {
  CHECK(exact_monomial_count(2, 1, 2) == 3);
  CHECK(exact_monomial_count(10, 2, 2) == 56);
  CHECK(exact_monomial_count(0, 0, 2) == 1);
  CHECK(exact_monomial_count(3, -1, 3) == 0);
  CHECK(exact_monomial_count(4, 4 * 2, 3) == 81);
  CHECK(exact_monomial_count(10, Rational(5, 2), 2) == 56);
}

TEST_CASE("monomial count matches brute-force enumeration") {
  for (std::uint64_t q = 2; q <= 5; ++q)
    for (std::uint64_t n = 0; n <= 5; ++n)
      for (std::int64_t d = -1; d <= static_cast<std::int64_t>(n * (q - 1)) + 1; ++d)
        CHECK(exact_monomial_count(n, d, q) == brute_monomial_count(n, d, q));
}

TEST_CASE("monomial count for q = 2 is a binomial sum") {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    std::uint64_t partial = 0;
    for (std::uint64_t d = 0; d <= n; ++d) {
      partial += binomial(n, d);
      CHECK(exact_monomial_count(n, static_cast<std::int64_t>(d), 2) == partial);
    }
  }
  // Beyond 64 bits.
  BigInt all = 1;
  for (int i = 0; i < 100; ++i) all *= 3;
  CHECK(exact_monomial_count(100, 200, 3) == all);
}

TEST_CASE("Hoeffding bound values") {
  CHECK(hoeffding_bound(10, 0.25, 2) == doctest::Approx(1024 * std::exp(-0.3125)));
  CHECK(hoeffding_bound(10, 0.25, 2) == doctest::Approx(749.2).epsilon(1e-3));
  CHECK(hoeffding_bound(1, 0.49, 3) == doctest::Approx(3 * std::exp(-0.49 * 0.49 / 2)));
  CHECK(hoeffding_bound(5, 1e-9, 3) == doctest::Approx(243.0));
  CHECK(log_hoeffding_bound(20, 0.1, 5) == doctest::Approx(20 * std::log(5.0) - 20 * 0.01 / 2));
  CHECK_THROWS_AS(hoeffding_bound(10, 0.0, 2), Error);
  CHECK_THROWS_AS(hoeffding_bound(10, 0.5, 2), Error);
  CHECK_THROWS_AS(c_exponent(0.7, 2), Error);
}

TEST_CASE("property: exact count sits below the Hoeffding bound") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      for (int i = 1; i <= 9; ++i) {
        const Rational eps(i, 20);
        const Rational cap = Rational(static_cast<std::int64_t>((q - 1) * n)) * (Rational(1, 2) - eps);
        const double exact = exact_monomial_count(n, cap, q).convert_to<double>();
        CHECK(exact <= hoeffding_bound(n, to_double(eps), q));
      }
    }
  }
}

TEST_CASE("c exponent") {
  CHECK(c_exponent(1.0 / 36, 2) == doctest::Approx(1 - (1.0 / 1296) / (2 * std::log(2.0))));
  CHECK(c_exponent(1.0 / 36, 2) == doctest::Approx(0.999443).epsilon(1e-6));
  CHECK(c_exponent(1.0 / 36, 3) > c_exponent(1.0 / 36, 2));
  for (std::uint64_t q : {2u, 3u, 5u, 7u})
    for (double eps : {0.05, 0.2, 0.45})
      for (std::uint64_t n : {1u, 10u, 30u}) {
        const double lhs = std::pow(static_cast<double>(q), n * c_exponent(eps, q));
        const double rhs = hoeffding_bound(n, eps, q);
        CHECK(std::abs(lhs - rhs) / rhs < 1e-9);
      }
}

TEST_CASE("epsilon of r and the degree-split condition") {
  CHECK(epsilon_of_r(1) == Rational(1, 12));
  CHECK(epsilon_of_r(2) == Rational(1, 36));
  CHECK(epsilon_of_r(3) == Rational(1, 76));
  CHECK(proposition_condition(63, 2, 9, 32, Rational(1, 36)));
  CHECK_FALSE(proposition_condition(1, 1, 2, 1, Rational(1, 4)));
  // Equality is admitted: 14 <= (1/2 - 1/4) * 56 = 14.
  CHECK(proposition_condition(63, 2, 9, 56, Rational(1, 4)));
  CHECK_FALSE(proposition_condition(63, 2, 9, 55, Rational(1, 4)));
}

TEST_CASE("property: degree-split condition is antitone in epsilon") {
  for (std::int64_t m = 1; m <= 20; ++m)
    for (std::int64_t n = 1; n <= 20; ++n) {
      bool previous = true;
      for (int i = 1; i <= 9; ++i) {
        const bool now = proposition_condition(m, 2, 5, n, Rational(i, 20));
        CHECK((previous || !now));
        previous = now;
      }
    }
}

TEST_CASE("size bound report") {
  const BoundReport a = theorem_bound(2, 2, 9, 0, 100);
  CHECK(a.epsilon == Rational(1, 36));
  CHECK(a.c_exponent == doctest::Approx(0.999443).epsilon(1e-6));
  CHECK(a.C_constant == 256);
  CHECK(a.logq_C == 8);
  CHECK(a.m == 99 * 2 + 1);
  CHECK(a.l == 2);
  CHECK(a.enough_variables);
  CHECK(a.n_large_enough);
  CHECK(a.proposition_holds);
  CHECK(a.applicable());
  CHECK(a.logq_bound == doctest::Approx(std::log2(9.0) + 8 + 100 * a.c_exponent));
  CHECK_FALSE(a.bound_value.has_value());

  const BoundReport b = theorem_bound(3, 2, 8, 0, 50);
  CHECK_FALSE(b.enough_variables);
  CHECK_FALSE(b.applicable());

  const BoundReport c = theorem_bound(2, 1, 3, 0, 4);
  CHECK(c.n_large_enough);
  CHECK(c.applicable());
  CHECK(c.epsilon == Rational(1, 12));
  REQUIRE(c.bound_value.has_value());
  CHECK(*c.bound_value == doctest::Approx(3 * 16 * std::pow(2.0, 4 * c.c_exponent)));

  CHECK_FALSE(theorem_bound(2, 1, 3, 0, 3).n_large_enough);
  CHECK_THROWS_AS(theorem_bound(1, 1, 3, 0, 3), Error);
  CHECK_THROWS_AS(theorem_bound(2, 0, 3, 0, 3), Error);
  CHECK_THROWS_AS(theorem_bound(2, 1, 1, 0, 3), Error);
}
