#include "slicelab/encoding.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>

namespace slicelab {
namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(unsigned n) {
  cpp_int out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

// Substitutes the coordinates of inner into a linear, constant-free outer map.
PolyMap compose_linear(const PolyMap& outer, const PolyMap& inner, const Field& field) {
  if (outer.nvars_in != inner.m()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot compose maps of mismatched shapes");
  }
  std::vector<MultiPoly> coords;
  coords.reserve(outer.m());
  for (const auto& coord : outer.coords) {
    MultiPoly acc(inner.nvars_in);
    for (const auto& [mono, c] : coord.terms()) {
      const auto& e = mono.exponents();
      const auto it = std::find(e.begin(), e.end(), 1u);
      if (mono.total_degree() != 1 || it == e.end()) {
        throw Error(ErrorKind::InvalidArgument, "outer map is not linear");
      }
      acc = add(acc, scale(inner.coords[it - e.begin()], c, field), field);
    }
    coords.push_back(std::move(acc));
  }
  return PolyMap::from_coords(inner.nvars_in, std::move(coords));
}

// Re-indexes a polynomial in n variables into total variables starting at offset.
MultiPoly embed(const MultiPoly& p, std::size_t total, std::size_t offset, const Field& field) {
  MultiPoly out(total);
  Monomial m(total);
  for (const auto& [mono, c] : p.terms()) {
    m = Monomial(total);
    for (std::size_t i = 0; i < mono.nvars(); ++i) m[offset + i] = mono[i];
    out.add_term(m, c, field);
  }
  return out;
}

}  // namespace

EquationSpec EquationSpec::from_coeffs(unsigned r, std::vector<UniPoly> coeffs,
                                       const Field& field) {
  EquationSpec eq;
  eq.k = coeffs.size();
  eq.r = r;
  for (const auto& a : coeffs) eq.d = std::max(eq.d, a.degree().value_or(0));
  eq.coeffs = std::move(coeffs);
  eq.validate(field);
  return eq;
}

void EquationSpec::validate(const Field& field) const {
  if (k < 2) throw Error(ErrorKind::InvalidEquation, "need k >= 2 variables");
  if (r < 1) throw Error(ErrorKind::InvalidEquation, "need exponent r >= 1");
  if (coeffs.size() != k) {
    throw Error(ErrorKind::InvalidEquation, "expected " + std::to_string(k) +
                                                " coefficients, got " +
                                                std::to_string(coeffs.size()));
  }
  UniPoly sum;
  for (std::size_t i = 0; i < k; ++i) {
    const auto deg = coeffs[i].degree();
    if (deg && *deg > d) {
      throw Error(ErrorKind::InvalidEquation, "coefficient a_" + std::to_string(i + 1) +
                                                  " has degree " + std::to_string(*deg) +
                                                  " > d = " + std::to_string(d));
    }
    sum = add(sum, coeffs[i], field);
  }
  if (!sum.is_zero()) {
    throw Error(ErrorKind::InvalidEquation, "coefficients must sum to zero, sum is '" +
                                                format_unipoly(sum) + "'");
  }
}

std::vector<std::size_t> EquationSpec::zero_coefficient_slots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) out.push_back(i);
  }
  return out;
}

PolyMap PolyMap::from_coords(std::size_t nvars_in, std::vector<MultiPoly> coords) {
  PolyMap map;
  map.nvars_in = nvars_in;
  for (const auto& c : coords) {
    if (c.nvars() != nvars_in) {
      throw Error(ErrorKind::DimensionMismatch, "coordinate arity differs from map input");
    }
    map.degree = std::max(map.degree, c.total_degree());
  }
  map.coords = std::move(coords);
  return map;
}

std::vector<FieldElement> vectorize(const UniPoly& f, std::size_t n) {
  if (const auto deg = f.degree(); deg && *deg >= n) {
    throw Error(ErrorKind::DegreeTooLarge, "polynomial of degree " + std::to_string(*deg) +
                                               " does not fit in length " + std::to_string(n));
  }
  std::vector<FieldElement> out(n);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeff(i);
  return out;
}

UniPoly devectorize(std::span<const FieldElement> v) {
  return UniPoly(std::vector<FieldElement>(v.begin(), v.end()));
}

std::vector<FieldElement> vectorize_tuple(std::span<const UniPoly> tuple, std::size_t n) {
  std::vector<FieldElement> out;
  out.reserve(tuple.size() * n);
  for (const auto& f : tuple) {
    const auto v = vectorize(f, n);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

PolyMap power_map(std::size_t n, unsigned r, const Field& field) {
  if (n == 0 || r == 0) throw Error(ErrorKind::InvalidArgument, "power_map needs n, r >= 1");
  const std::size_t m = (n - 1) * r + 1;
  std::vector<MultiPoly> coords(m, MultiPoly(n));
  const cpp_int r_fact = factorial(r);
  const cpp_int p = field.characteristic();

  Monomial exps(n);
  std::function<void(std::size_t, unsigned, std::size_t)> recurse =
      [&](std::size_t var, unsigned remaining, std::size_t weight) {
        if (var + 1 == n) {
          exps[var] = remaining;
          const std::size_t s = weight + var * remaining;
          cpp_int denom = 1;
          for (std::size_t i = 0; i < n; ++i) denom *= factorial(exps[i]);
          const cpp_int multinomial = r_fact / denom;
          const auto residue = static_cast<std::int64_t>(multinomial % p);
          coords[s].add_term(exps, field.from_int(residue), field);
          return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
          exps[var] = e;
          recurse(var + 1, remaining - e, weight + var * e);
        }
      };
  recurse(0, r, 0);
  return PolyMap::from_coords(n, std::move(coords));
}

PolyMap scalar_mul_map(const UniPoly& a, std::size_t n, std::size_t d, const Field& field) {
  if (const auto deg = a.degree(); deg && *deg > d) {
    throw Error(ErrorKind::DegreeTooLarge, "coefficient degree " + std::to_string(*deg) +
                                               " exceeds bound d = " + std::to_string(d));
  }
  std::vector<MultiPoly> coords(n + d, MultiPoly(n));
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = 1;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      coords[i + j].add_term(m, a.coeff(j), field);
    }
    m[i] = 0;
  }
  return PolyMap::from_coords(n, std::move(coords));
}

PolyMap build_equation_map(const EquationSpec& eq, std::size_t n, const Field& field,
                           const Budget& budget) {
  eq.validate(field);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
  const std::size_t total = eq.k * n;
  const std::size_t m = (n - 1) * eq.r + eq.d + 1;
  const PolyMap power = power_map(n, eq.r, field);

  std::vector<MultiPoly> coords(m, MultiPoly(total));
  for (std::size_t j = 0; j < eq.k; ++j) {
    const PolyMap slot =
        compose_linear(scalar_mul_map(eq.coeffs[j], power.m(), eq.d, field), power, field);
    for (std::size_t s = 0; s < m; ++s) {
      coords[s] = add(coords[s], embed(slot.coords[s], total, j * n, field), field);
      if (coords[s].term_count() > budget.max_terms) {
        throw Error(ErrorKind::SizeBudgetExceeded, "equation map coordinate exceeds term budget");
      }
    }
  }
  return PolyMap::from_coords(total, std::move(coords));
}

std::vector<FieldElement> map_eval(const PolyMap& map, std::span<const FieldElement> point,
                                   const Field& field) {
  if (point.size() != map.nvars_in) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, map expects " +
                    std::to_string(map.nvars_in));
  }
  std::vector<FieldElement> out;
  out.reserve(map.m());
  for (const auto& c : map.coords) out.push_back(multipoly_eval(c, point, field));
  return out;
}

}  // namespace slicelab
