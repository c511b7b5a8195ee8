#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slicelab {

/// An element of F_q, stored as the integer code sum_i rep_i * p^i of its
/// coordinates in the F_p-basis 1, t, ..., t^{e-1}. Only meaningful together
/// with the Field that produced it.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

/// Finite field F_q with q = p^e <= kMaxOrder. Extension fields are built as
/// F_p[t]/(modulus) with a monic irreducible modulus, validated at
/// construction. All arithmetic goes through precomputed tables.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 64;

  /// Throws Error{NonPrimeP} if p is not prime, Error{UnsupportedSize} if
  /// p^e exceeds kMaxOrder or no built-in modulus exists, and
  /// Error{ReducibleModulus} if the modulus is not monic irreducible of
  /// degree e.
  static Field build(std::uint32_t p, std::uint32_t e,
                     std::optional<std::vector<std::uint32_t>> modulus = {});

  /// Builds F_q for a prime-power q using the built-in modulus table.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Ascending coefficients of the defining polynomial; {0, 1} for e = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Element with the given integer code; throws on code >= q.
  FieldElement element(std::uint32_t code) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  /// All q elements in code order.
  std::vector<FieldElement> elements() const;
  /// Coordinates of x in the basis 1, t, ..., t^{e-1}.
  std::vector<std::uint32_t> coordinates(FieldElement x) const;
  FieldElement from_coordinates(const std::vector<std::uint32_t>& rep) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement{add_[a.code() * q_ + b.code()]};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement{mul_[a.code() * q_ + b.code()]};
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.code()]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Throws Error{InvalidArgument} on zero.
  FieldElement inv(FieldElement a) const;
  /// a^k with 0^0 = 1.
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

  /// "q=p^e" or "q=p^e modulus=c0,...,ce" when e > 1.
  std::string describe() const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power >= 2.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Built-in monic irreducible modulus for q = p^e with e > 1, q <= 64.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p,
                                                          std::uint32_t e);

/// Exhaustive irreducibility test over F_p: tries every monic divisor of
/// degree 1..deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Parses a field spec: "q=9", "q=3^2", "9", "3^2", optionally followed by
/// " modulus=c0,c1,...". An explicit modulus argument takes precedence.
Field parse_field_spec(std::string_view spec,
                       std::optional<std::string_view> modulus = {});

}  // namespace slicelab
