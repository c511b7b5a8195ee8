#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slicelab/encoding.hpp"
#include "slicelab/unipoly.hpp"

namespace slicelab {

/// A deduplicated set of polynomials of degree < n, kept in canonical order.
class PolySet {
 public:
  PolySet() = default;
  /// Sorts and deduplicates. Throws Error{DegreeTooLarge} if a member has
  /// degree >= n.
  PolySet(std::size_t n, std::vector<UniPoly> members);

  std::size_t n() const { return n_; }
  const std::vector<UniPoly>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const PolySet&, const PolySet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<UniPoly> members_;
};

enum class SolutionStatus { Free, Witness };

struct SolutionReport {
  SolutionStatus status = SolutionStatus::Free;
  /// A non-constant tuple satisfying the equation, when status is Witness.
  std::optional<std::vector<UniPoly>> witness;
  std::uint64_t tuples_examined = 0;
};

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// sum_i a_i f_i^r == 0, by direct univariate arithmetic. Throws
/// Error{ArityMismatch} unless tuple.size() == eq.k.
bool is_solution(const EquationSpec& eq, std::span<const UniPoly> tuple, const Field& field);

/// True iff every entry equals the first (vacuously for size <= 1).
bool is_trivial(std::span<const UniPoly> tuple);

/// Enumerates A^k lexicographically (entries in canonical order) and returns
/// the first non-trivial solution, or Free. Throws Error{SizeBudgetExceeded}
/// if |A|^k exceeds budget.max_evaluations. The result does not depend on
/// options.threads.
SolutionReport verify_solution_free(const PolySet& A, const EquationSpec& eq,
                                    const Field& field, const Budget& budget = {},
                                    const SearchOptions& options = {});

struct MaxFreeResult {
  std::size_t size = 0;
  PolySet witness;
  std::uint64_t subsets_examined = 0;
};

/// Largest solution-free subset of P_{q,n} with the lexicographically least
/// witness among those of that size. Requires q^n <= 16.
MaxFreeResult exhaustive_max_free(std::size_t n, const EquationSpec& eq, const Field& field,
                                  const Budget& budget = {}, const SearchOptions& options = {});

/// Greedy solution-free set: scans P_{q,n} in a seeded shuffled order and
/// keeps each polynomial whose addition leaves the set solution-free.
PolySet greedy_free(std::size_t n, const EquationSpec& eq, const Field& field,
                    std::uint64_t seed, const Budget& budget = {});

}  // namespace slicelab
