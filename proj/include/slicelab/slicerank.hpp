#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "slicelab/counting.hpp"
#include "slicelab/encoding.hpp"
#include "slicelab/multipoly.hpp"

namespace slicelab {

/// Explicit polynomial cover
///   P(X_1..X_k) = sum_j sum_{p in M_j} p(X_j) F_{j,p}(X_1..X_{j-1}, X_{j+1}..X_k)
/// with X_j the n variables of slot j. slots[j] maps each p in M_j (a
/// monomial in n variables) to its cofactor F_{j,p}, a polynomial in the
/// (k-1)*n variables of the other slots, in slot order.
struct SliceCover {
  std::size_t k = 0;
  std::size_t n = 0;
  /// Admission bound: every p in M_j has total degree <= threshold.
  Rational threshold;
  std::vector<std::map<Monomial, MultiPoly>> slots;

  /// sum_j |M_j|.
  std::size_t size() const;
};

/// prod_i (1 - Phi_i^{q-1}) reduced modulo the function ideal, built by
/// iterated multipoly_mul_reduced. Equals 1 on the zero set of Phi and 0
/// elsewhere. Throws Error{SizeBudgetExceeded} if q^{nvars_in} exceeds
/// budget.max_terms.
MultiPoly indicator_poly(const PolyMap& map, const Field& field, const Budget& budget = {});

/// (q-1) m l / k, the degree threshold guaranteed admissible by pigeonhole.
Rational pigeonhole_threshold(std::uint64_t q, std::uint64_t m, std::uint64_t l,
                              std::uint64_t k);

/// Assigns every monomial of P to the smallest slot j whose slot-degree is
/// <= threshold, summing cofactors that share (j, p_j). Throws
/// Error{NoAdmissibleSlot} if some monomial exceeds the threshold in every
/// slot and Error{DimensionMismatch} unless P has k*n variables.
SliceCover build_cover(const MultiPoly& P, std::size_t k, std::size_t n,
                       const Rational& threshold, const Field& field);

/// Value of the cover's right-hand side at a point of (F_q^n)^k.
FieldElement cover_eval(const SliceCover& cover, std::span<const FieldElement> point,
                        const Field& field);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CoverVerdict {
  bool pass = true;
  /// First failing point (lowest index in exhaustive mode, first drawn in
  /// sampled mode).
  std::optional<std::vector<FieldElement>> witness;
  std::uint64_t points_checked = 0;
  VerifyMode mode = VerifyMode::Exhaustive;
};

/// Checks P == cover pointwise. Exhaustive mode visits every point of
/// (F_q^n)^k and throws Error{SizeBudgetExceeded} when q^{kn} exceeds
/// budget.max_points; sampled mode checks options.samples random points.
/// The verdict does not depend on options.threads.
CoverVerdict verify_cover(const MultiPoly& P, const SliceCover& cover, const Field& field,
                          const VerifyOptions& options = {}, const Budget& budget = {});

/// Dense matrix over F_q, row-major.
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> data;

  FieldElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Rank by Gaussian elimination over F_q.
std::size_t matrix_rank(FieldMatrix matrix, const Field& field);

/// Rank of the s x s identity over F_q, computed by elimination: the slice
/// rank of the k = 2 diagonal indicator sum_{f in A} delta_f (x) delta_f with
/// |A| = s.
std::size_t diagonal_rank_k2(std::size_t s, const Field& field);

/// delta_f(x) = prod_i (1 - (x_i - f_i)^{q-1}) in n variables, reduced.
MultiPoly delta_poly(std::span<const FieldElement> f, const Field& field);

/// sum_{f in A} prod_j delta_f(X_j) on k*n variables.
MultiPoly diagonal_indicator(std::span<const std::vector<FieldElement>> A, std::size_t k,
                             const Field& field, const Budget& budget = {});

/// Exact slice rank of a function on (F_q^n)^k, given as its table (index
/// layout of function_table), by enumerating covers of increasing size whose
/// slot functions and cofactors range over all functions. Throws
/// Error{SizeBudgetExceeded} once the candidate count for the next size
/// exceeds budget.max_evaluations. Only feasible for tiny q, n, k.
std::size_t slice_rank_exhaustive(std::span<const FieldElement> table, std::size_t k,
                                  std::size_t n, const Field& field, const Budget& budget = {});

}  // namespace slicelab
