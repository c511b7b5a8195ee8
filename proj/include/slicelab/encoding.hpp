#pragma once

#include <span>
#include <vector>

#include "slicelab/multipoly.hpp"
#include "slicelab/unipoly.hpp"

namespace slicelab {

/// Data (k, r, a_1..a_k, d) of the diagonal equation sum_i a_i f_i^r = 0.
struct EquationSpec {
  std::size_t k = 0;
  unsigned r = 1;
  std::vector<UniPoly> coeffs;
  std::size_t d = 0;

  /// Builds a spec with d = max deg a_i and validates it.
  static EquationSpec from_coeffs(unsigned r, std::vector<UniPoly> coeffs,
                                  const Field& field);

  /// Throws Error{InvalidEquation} unless k >= 2, r >= 1, coeffs.size() == k,
  /// every deg a_i <= d and sum_i a_i = 0.
  void validate(const Field& field) const;

  /// Indices (0-based) of slots whose coefficient is the zero polynomial;
  /// such slots make the corresponding variable vacuous.
  std::vector<std::size_t> zero_coefficient_slots() const;
};

/// Vector-valued polynomial map F_q^nvars_in -> F_q^m.
struct PolyMap {
  std::size_t nvars_in = 0;
  std::vector<MultiPoly> coords;
  /// Max total degree over the coordinates.
  std::uint64_t degree = 0;

  std::size_t m() const { return coords.size(); }

  /// Builds a map and fills in the degree; all coords must have nvars_in vars.
  static PolyMap from_coords(std::size_t nvars_in, std::vector<MultiPoly> coords);
};

/// Coefficients of f padded to length n. Throws Error{DegreeTooLarge} if
/// deg f >= n.
std::vector<FieldElement> vectorize(const UniPoly& f, std::size_t n);
UniPoly devectorize(std::span<const FieldElement> v);

/// The degree-r map Q with Q(vec f) = vec(f^r): coordinate s is the sum over
/// exponent vectors (e_0..e_{n-1}) with sum e_i = r and sum i*e_i = s of the
/// multinomial r!/prod e_i! (reduced mod p) times prod f_i^{e_i}.
PolyMap power_map(std::size_t n, unsigned r, const Field& field);

/// The linear map vec f -> vec(a f), F_q^n -> F_q^{n+d}. Throws
/// Error{DegreeTooLarge} if deg a > d.
PolyMap scalar_mul_map(const UniPoly& a, std::size_t n, std::size_t d, const Field& field);

/// The map (vec f_1, ..., vec f_k) -> vec(sum_i a_i f_i^r) on k*n variables,
/// with m = (n-1)r + d + 1 coordinates. Variable (slot j, coefficient i) sits
/// at flat index j*n + i (0-based).
PolyMap build_equation_map(const EquationSpec& eq, std::size_t n, const Field& field,
                           const Budget& budget = {});

std::vector<FieldElement> map_eval(const PolyMap& map, std::span<const FieldElement> point,
                                   const Field& field);

/// Concatenation vec f_1 || ... || vec f_k.
std::vector<FieldElement> vectorize_tuple(std::span<const UniPoly> tuple, std::size_t n);

}  // namespace slicelab
