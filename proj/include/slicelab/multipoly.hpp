#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "slicelab/error.hpp"
#include "slicelab/field.hpp"

namespace slicelab {

/// Exponent vector of a monomial; ordered lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  std::size_t nvars() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint64_t total_degree() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Sparse polynomial in nvars variables over F_q. Terms are kept in
/// lexicographic monomial order and never hold a zero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, FieldElement c);
  static MultiPoly variable(std::size_t nvars, std::size_t index, const Field& field);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree over terms; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  FieldElement coeff(const Monomial& m) const;

  /// Adds c * m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, FieldElement c, const Field& field);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Field& field);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Field& field);
MultiPoly scale(const MultiPoly& a, FieldElement c, const Field& field);
/// Plain product without reduction modulo the function ideal.
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Field& field);

/// Folds exponents with e -> ((e-1) mod (q-1)) + 1 for e >= q, i.e. reduces
/// modulo the ideal generated by x^q - x. The result agrees with p as a
/// function on F_q^nvars and has every exponent <= q-1.
MultiPoly reduce_exponents(const MultiPoly& p, const Field& field);

/// reduce_exponents(a * b). Throws Error{SizeBudgetExceeded} if the
/// product would hold more than budget.max_terms terms.
MultiPoly multipoly_mul_reduced(const MultiPoly& a, const MultiPoly& b, const Field& field,
                                const Budget& budget = {});

/// Throws Error{DimensionMismatch} when point.size() != p.nvars().
FieldElement multipoly_eval(const MultiPoly& p, std::span<const FieldElement> point,
                            const Field& field);

/// Value of a bare monomial at a point (0^0 = 1).
FieldElement monomial_eval(const Monomial& m, std::span<const FieldElement> point,
                           const Field& field);

/// Function table of p over F_q^nvars, point index in mixed radix with
/// variable 0 as the most significant digit.
std::vector<FieldElement> function_table(const MultiPoly& p, const Field& field,
                                         const Budget& budget = {});

/// Point of F_q^nvars for a mixed-radix index, variable 0 most significant.
std::vector<FieldElement> point_from_index(std::uint64_t index, std::size_t nvars,
                                           std::uint32_t q);

/// q^n, or Error{SizeBudgetExceeded} if it exceeds cap.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t n, std::uint64_t cap,
                            const char* what);

}  // namespace slicelab
