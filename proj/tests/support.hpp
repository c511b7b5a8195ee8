#pragma once

// Hand-rolled generators and brute-force reference implementations shared by
// the test binaries. Nothing here calls into the library's arithmetic beyond
// Field::add / Field::mul, which the algebra tests check against
// coordinate-level schoolbook arithmetic.

#include <cstdint>
#include <random>
#include <vector>

#include "slicelab/encoding.hpp"
#include "slicelab/field.hpp"
#include "slicelab/multipoly.hpp"
#include "slicelab/unipoly.hpp"

namespace testsupport {

using namespace slicelab;

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline FieldElement random_element(Rng& rng, const Field& field) {
  return FieldElement{static_cast<std::uint32_t>(below(rng, field.order()))};
}

// Random polynomial of degree < len (possibly zero).
inline UniPoly random_poly(Rng& rng, const Field& field, std::size_t len) {
  std::vector<FieldElement> c(len);
  for (auto& x : c) x = random_element(rng, field);
  return UniPoly(std::move(c));
}

// Raw coefficient vectors, no trimming. Independent of UniPoly arithmetic.
using Raw = std::vector<FieldElement>;

inline Raw raw_mul(const Raw& f, const Raw& g, const Field& field) {
  if (f.empty() || g.empty()) return {};
  Raw out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = field.add(out[i + j], field.mul(f[i], g[j]));
  return out;
}

inline Raw raw_pow(const Raw& f, unsigned r, const Field& field) {
  Raw out{field.one()};
  for (unsigned i = 0; i < r; ++i) out = raw_mul(out, f, field);
  return out;
}

// sum_i a_i f_i^r padded to len coordinates; longer only if a nonzero
// coefficient lies past len.
inline Raw raw_equation_value(const EquationSpec& eq, const std::vector<Raw>& fs,
                              std::size_t len, const Field& field) {
  Raw out(len);
  for (std::size_t i = 0; i < eq.k; ++i) {
    const Raw term = raw_mul(Raw(eq.coeffs[i].coeffs()), raw_pow(fs[i], eq.r, field), field);
    if (term.size() > out.size()) out.resize(term.size());
    for (std::size_t s = 0; s < term.size(); ++s) out[s] = field.add(out[s], term[s]);
  }
  while (out.size() > len && out.back().is_zero()) out.pop_back();
  return out;
}

// Random coefficient tuple of degree <= d summing to zero: the last entry is
// minus the sum of the others.
inline std::vector<UniPoly> random_zero_sum(Rng& rng, const Field& field, std::size_t k,
                                            std::size_t d) {
  std::vector<std::vector<FieldElement>> c(k, std::vector<FieldElement>(d + 1));
  for (std::size_t s = 0; s <= d; ++s) {
    FieldElement total{};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      c[i][s] = random_element(rng, field);
      total = field.add(total, c[i][s]);
    }
    c[k - 1][s] = field.neg(total);
  }
  std::vector<UniPoly> out;
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

// Random sparse polynomial with exponents up to max_exp.
inline MultiPoly random_multipoly(Rng& rng, const Field& field, std::size_t nvars,
                                  std::size_t terms, std::uint32_t max_exp) {
  MultiPoly p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = static_cast<std::uint32_t>(below(rng, max_exp + 1));
    p.add_term(Monomial(std::move(e)), random_element(rng, field), field);
  }
  return p;
}

// Evaluation by explicit repeated multiplication, term by term.
inline FieldElement naive_eval(const MultiPoly& p, const std::vector<FieldElement>& x,
                               const Field& field) {
  FieldElement total{};
  for (const auto& [mono, c] : p.terms()) {
    FieldElement v = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::uint32_t e = 0; e < mono[i]; ++e) v = field.mul(v, x[i]);
    total = field.add(total, v);
  }
  return total;
}

// Odometer over F_q^nvars with variable 0 most significant.
inline bool next_point(std::vector<FieldElement>& x, std::uint32_t q) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i].code() + 1 < q) {
      x[i] = FieldElement{x[i].code() + 1};
      return true;
    }
    x[i] = FieldElement{0};
  }
  return false;
}

// |{e in [0,q-1]^n : sum e <= d}| by enumerating every exponent vector.
inline std::uint64_t brute_monomial_count(std::uint64_t n, std::int64_t d, std::uint64_t q) {
  std::vector<std::uint64_t> e(n, 0);
  std::uint64_t count = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto x : e) sum += static_cast<std::int64_t>(x);
    if (sum <= d) ++count;
    std::size_t i = 0;
    while (i < n && e[i] == q - 1) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return count;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace testsupport
