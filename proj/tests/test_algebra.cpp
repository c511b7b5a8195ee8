#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicelab/error.hpp"
#include "support.hpp"

using namespace slicelab;
using namespace testsupport;

namespace {

// Product of two elements of F_p[x]/(modulus) on coordinate vectors.
std::vector<std::uint32_t> coord_mul(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint32_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // modulus is monic; x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
  for (std::size_t deg = prod.size(); deg-- > e;) {
    const std::uint32_t c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < e; ++i) {
      prod[deg - e + i] = (prod[deg - e + i] + (p - (c * modulus[i]) % p)) % p;
    }
  }
  prod.resize(e);
  return prod;
}

std::uint32_t code_of(const std::vector<std::uint32_t>& rep, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = rep.size(); i-- > 0;) code = code * p + rep[i];
  return code;
}

const std::vector<std::uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

}  // namespace

TEST_CASE("primality and prime powers") {
  std::vector<int> primes;
  for (int n = 2; n < 200; ++n) {
    bool prime = true;
    for (int d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    CHECK(is_prime(n) == prime);
    if (prime) primes.push_back(n);
  }
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  for (std::uint64_t q = 0; q < 200; ++q) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> expect;
    for (int p : primes) {
      std::uint64_t v = p;
      for (std::uint32_t e = 1; v <= q; ++e, v *= p)
        if (v == q) expect = std::make_pair(static_cast<std::uint32_t>(p), e);
    }
    CHECK(prime_power(q) == expect);
  }
}

TEST_CASE("built-in moduli are irreducible and match a root-free check") {
  for (auto q : kOrders) {
    const auto [p, e] = *prime_power(q);
    const auto mod = builtin_modulus(p, e);
    REQUIRE(mod.has_value());
    CHECK(mod->size() == e + 1);
    CHECK(mod->back() == 1);
    CHECK(is_irreducible_mod_p(*mod, p));
  }
  // x^2 + 1 splits mod 2 and mod 5, is irreducible mod 3 and 7.
  CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 5));
  CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
  CHECK(is_irreducible_mod_p({1, 0, 1}, 7));
  // (x^2+x+1)^2 over F_2 has no roots but is reducible.
  CHECK_FALSE(is_irreducible_mod_p({1, 0, 1, 0, 1}, 2));
  CHECK(is_irreducible_mod_p({1, 1, 0, 0, 1}, 2));
}

TEST_CASE("field construction errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { Field::build(4, 1); }) == ErrorKind::NonPrimeP);
  CHECK(kind_of([] { Field::build(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) ==
        ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { Field::of_order(6); }) == ErrorKind::NonPrimeP);
  CHECK(kind_of([] { Field::of_order(1); }) == ErrorKind::NonPrimeP);
  CHECK(kind_of([] { Field::of_order(81); }) == ErrorKind::UnsupportedSize);
  CHECK(kind_of([] { parse_field_spec("q=12"); }) == ErrorKind::NonPrimeP);
}

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("q=9") == Field::of_order(9));
  CHECK(parse_field_spec("3^2") == Field::of_order(9));
  CHECK(parse_field_spec("9").order() == 9);
  const Field custom = parse_field_spec("q=4", "1,1,1");
  CHECK(custom.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const Field f9 = parse_field_spec("9", "2,2,1");
  CHECK(f9.modulus() == std::vector<std::uint32_t>{2, 2, 1});
}

TEST_CASE("field tables match coordinate arithmetic") {
  for (auto q : kOrders) {
    const Field f = Field::of_order(q);
    const auto p = f.characteristic();
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ra = f.coordinates(FieldElement{a});
      CHECK(code_of(ra, p) == a);
      CHECK(f.from_coordinates(ra) == FieldElement{a});
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto rb = f.coordinates(FieldElement{b});
        std::vector<std::uint32_t> sum(ra.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (ra[i] + rb[i]) % p;
        CHECK(f.add(FieldElement{a}, FieldElement{b}).code() == code_of(sum, p));
        CHECK(f.mul(FieldElement{a}, FieldElement{b}).code() ==
              code_of(coord_mul(ra, rb, f.modulus(), p), p));
      }
    }
  }
}

TEST_CASE("property: field axioms hold exhaustively for q <= 9") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    const auto els = f.elements();
    CHECK(els.size() == q);
    std::size_t failures = 0;
    for (auto a : els) {
      failures += f.add(a, f.zero()) != a;
      failures += f.mul(a, f.one()) != a;
      failures += f.add(a, f.neg(a)) != f.zero();
      failures += f.sub(a, a) != f.zero();
      if (!a.is_zero()) failures += f.mul(a, f.inv(a)) != f.one();
      failures += f.pow(a, q) != a;
      for (auto b : els) {
        failures += f.add(a, b) != f.add(b, a);
        failures += f.mul(a, b) != f.mul(b, a);
        for (auto c : els) {
          failures += f.add(f.add(a, b), c) != f.add(a, f.add(b, c));
          failures += f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c));
          failures += f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CAPTURE(q);
    CHECK(failures == 0);
  }
}

TEST_CASE("property: pow equals repeated multiplication") {
  for (auto q : kOrders) {
    const Field f = Field::of_order(q);
    for (auto a : f.elements()) {
      FieldElement acc = f.one();
      for (std::uint64_t k = 0; k < 2 * q + 3; ++k) {
        CHECK(f.pow(a, k) == acc);
        acc = f.mul(acc, a);
      }
    }
  }
  const Field f = Field::of_order(5);
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
}

TEST_CASE("from_int reduces modulo p") {
  const Field f = Field::of_order(7);
  CHECK(f.from_int(-1) == FieldElement{6});
  CHECK(f.from_int(15) == FieldElement{1});
  const Field f9 = Field::of_order(9);
  CHECK(f9.from_int(5) == FieldElement{2});
  CHECK_THROWS_AS(f9.element(9), Error);
}

TEST_CASE("univariate arithmetic against raw schoolbook products") {
  Rng rng(11);
  for (auto q : {2u, 3u, 4u, 9u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 200; ++trial) {
      const UniPoly a = random_poly(rng, f, below(rng, 5));
      const UniPoly b = random_poly(rng, f, below(rng, 5));
      CHECK(mul(a, b, f) == UniPoly(raw_mul(a.coeffs(), b.coeffs(), f)));
      const unsigned r = 1 + static_cast<unsigned>(below(rng, 4));
      CHECK(unipoly_pow(a, r, f) == UniPoly(raw_pow(a.coeffs(), r, f)));
      CHECK(sub(add(a, b, f), b, f) == a);
      CHECK(add(a, neg(a, f), f).is_zero());
      const FieldElement c = random_element(rng, f);
      CHECK(scale(a, c, f) == mul(a, UniPoly::constant(c), f));
    }
  }
  const Field f = Field::of_order(3);
  CHECK_THROWS_AS(unipoly_pow(UniPoly::constant(f.one()), 0, f), Error);
}

TEST_CASE("univariate trimming, degree and text format") {
  const Field f = Field::of_order(3);
  const UniPoly g({FieldElement{1}, FieldElement{2}, FieldElement{0}, FieldElement{0}});
  CHECK(g.coeffs().size() == 2);
  CHECK(g.degree() == 1);
  CHECK_FALSE(UniPoly().degree().has_value());
  CHECK(UniPoly({FieldElement{0}}).is_zero());
  CHECK(format_unipoly(g) == "1 2");
  CHECK(format_unipoly(UniPoly()) == "0");
  CHECK(parse_unipoly("1 2 0", f) == g);
  CHECK(parse_unipoly("0", f).is_zero());
  CHECK_THROWS_AS(parse_unipoly("3", f), Error);
  CHECK_THROWS_AS(parse_unipoly("x", f), Error);
  CHECK(UniPoly::monomial(FieldElement{2}, 2) ==
        UniPoly({FieldElement{0}, FieldElement{0}, FieldElement{2}}));
}

TEST_CASE("all_polys_below enumerates P_{q,n} in canonical order") {
  for (auto q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto all = all_polys_below(n, f);
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < n; ++i) expect *= q;
      CHECK(all.size() == expect);
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(canonical_less(all[i - 1], all[i]));
      for (const auto& g : all) CHECK(g.coeffs().size() <= n);
    }
  }
  const Field f = Field::of_order(3);
  const auto all = all_polys_below(2, f);
  CHECK(format_unipoly(all[0]) == "0");
  CHECK(format_unipoly(all[1]) == "0 1");
  CHECK(format_unipoly(all[3]) == "1");
}

TEST_CASE("multivariate basics") {
  const Field f = Field::of_order(5);
  MultiPoly p(2);
  p.add_term(Monomial({1, 2}), FieldElement{3}, f);
  p.add_term(Monomial({1, 2}), FieldElement{2}, f);
  CHECK(p.is_zero());
  p.add_term(Monomial({0, 3}), FieldElement{4}, f);
  p.add_term(Monomial({2, 0}), FieldElement{1}, f);
  CHECK(p.term_count() == 2);
  CHECK(p.total_degree() == 3);
  CHECK(p.coeff(Monomial({0, 3})) == FieldElement{4});
  CHECK(p.coeff(Monomial({1, 1})) == FieldElement{0});
  const std::vector<FieldElement> pt{FieldElement{2}, FieldElement{3}};
  // 4*27 + 4 = 112 = 2 mod 5.
  CHECK(multipoly_eval(p, pt, f) == FieldElement{2});
  CHECK_THROWS_AS(multipoly_eval(p, std::vector<FieldElement>{FieldElement{1}}, f), Error);
  CHECK(MultiPoly::variable(3, 1, f).coeff(Monomial({0, 1, 0})) == f.one());
  CHECK(MultiPoly::constant(3, FieldElement{0}).is_zero());
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  Rng rng(5);
  for (auto q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t nv = 1 + below(rng, 3);
      const MultiPoly a = random_multipoly(rng, f, nv, below(rng, 6), 5);
      const MultiPoly b = random_multipoly(rng, f, nv, below(rng, 6), 5);
      std::vector<FieldElement> x(nv);
      for (auto& v : x) v = random_element(rng, f);
      const auto ea = multipoly_eval(a, x, f);
      const auto eb = multipoly_eval(b, x, f);
      CHECK(ea == naive_eval(a, x, f));
      CHECK(multipoly_eval(add(a, b, f), x, f) == f.add(ea, eb));
      CHECK(multipoly_eval(sub(a, b, f), x, f) == f.sub(ea, eb));
      CHECK(multipoly_eval(mul(a, b, f), x, f) == f.mul(ea, eb));
      CHECK(multipoly_eval(multipoly_mul_reduced(a, b, f), x, f) == f.mul(ea, eb));
    }
  }
}

TEST_CASE("property: reduction preserves functions and bounds exponents") {
  Rng rng(9);
  for (auto q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t nv = 1 + below(rng, 2);
      const MultiPoly a = random_multipoly(rng, f, nv, 1 + below(rng, 6), 3 * q);
      const MultiPoly red = reduce_exponents(a, f);
      for (const auto& [m, c] : red.terms())
        for (auto e : m.exponents()) CHECK(e <= q - 1);
      std::vector<FieldElement> x(nv);
      do {
        CHECK(multipoly_eval(red, x, f) == naive_eval(a, x, f));
      } while (next_point(x, q));
      CHECK(reduce_exponents(red, f) == red);
    }
  }
}

TEST_CASE("reduced product agrees with reducing the plain product") {
  Rng rng(21);
  for (auto q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t nv = 1 + below(rng, 4);
      const MultiPoly a = random_multipoly(rng, f, nv, below(rng, 8), q);
      const MultiPoly b = random_multipoly(rng, f, nv, below(rng, 8), q);
      CHECK(multipoly_mul_reduced(a, b, f) == reduce_exponents(mul(a, b, f), f));
    }
  }
}

TEST_CASE("function tables and point indexing") {
  const Field f = Field::of_order(3);
  const MultiPoly x0 = MultiPoly::variable(2, 0, f);
  const auto table = function_table(x0, f);
  REQUIRE(table.size() == 9);
  for (std::uint64_t i = 0; i < 9; ++i) {
    CHECK(table[i] == FieldElement{static_cast<std::uint32_t>(i / 3)});
    const auto pt = point_from_index(i, 2, 3);
    CHECK(pt[0].code() == i / 3);
    CHECK(pt[1].code() == i % 3);
  }
  CHECK(checked_power(3, 4, 100, "x") == 81);
  CHECK_THROWS_AS(checked_power(3, 5, 100, "x"), Error);
  Budget tight;
  tight.max_points = 4;
  CHECK_THROWS_AS(function_table(MultiPoly(3), f, tight), Error);
}

TEST_CASE("budget from environment") {
  ::setenv(kBudgetEnvVar, "1234", 1);
  const Budget b = Budget::from_environment();
  CHECK(b.max_evaluations == 1234);
  CHECK(b.max_points == 1234);
  ::unsetenv(kBudgetEnvVar);
  CHECK(Budget::from_environment().max_points == Budget{}.max_points);
}
