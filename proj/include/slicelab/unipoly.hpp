#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slicelab/field.hpp"

namespace slicelab {

/// Element of F_q[t] in trimmed form: coefficient i multiplies t^i and the
/// highest stored coefficient is nonzero. The zero polynomial stores nothing.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElement> coeffs);

  static UniPoly constant(FieldElement c) { return UniPoly({c}); }
  static UniPoly monomial(FieldElement c, std::size_t power);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero past the end.
  FieldElement coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement{};
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt stands for deg 0 = -infinity.
  std::optional<std::size_t> degree() const;

  friend auto operator<=>(const UniPoly&, const UniPoly&) = default;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

UniPoly add(const UniPoly& f, const UniPoly& g, const Field& field);
UniPoly sub(const UniPoly& f, const UniPoly& g, const Field& field);
UniPoly neg(const UniPoly& f, const Field& field);
UniPoly scale(const UniPoly& f, FieldElement c, const Field& field);
UniPoly mul(const UniPoly& f, const UniPoly& g, const Field& field);

/// f^r by repeated convolution. Throws Error{InvalidArgument} for r = 0.
UniPoly unipoly_pow(const UniPoly& f, unsigned r, const Field& field);

/// Ascending coefficient list separated by spaces: "1 2 0 1" is 1 + 2t + t^3.
/// Each coefficient is the integer code of an element of F_q. The zero
/// polynomial is "0".
std::string format_unipoly(const UniPoly& f);
UniPoly parse_unipoly(std::string_view text, const Field& field);

/// Canonical comparison used for enumeration: lexicographic on the padded
/// ascending coefficient vector (c_0, c_1, ...), elements by code.
bool canonical_less(const UniPoly& f, const UniPoly& g);

/// All polynomials of degree < n, in canonical order.
std::vector<UniPoly> all_polys_below(std::size_t n, const Field& field);

}  // namespace slicelab
