#include "slicelab/unipoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "slicelab/error.hpp"

namespace slicelab {

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(FieldElement c, std::size_t power) {
  std::vector<FieldElement> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

UniPoly add(const UniPoly& f, const UniPoly& g, const Field& field) {
  std::vector<FieldElement> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(f.coeff(i), g.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly neg(const UniPoly& f, const Field& field) {
  std::vector<FieldElement> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.neg(f.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly sub(const UniPoly& f, const UniPoly& g, const Field& field) {
  return add(f, neg(g, field), field);
}

UniPoly scale(const UniPoly& f, FieldElement c, const Field& field) {
  std::vector<FieldElement> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(f.coeff(i), c);
  return UniPoly(std::move(out));
}

UniPoly mul(const UniPoly& f, const UniPoly& g, const Field& field) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<FieldElement> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(f.coeff(i), g.coeff(j)));
    }
  }
  return UniPoly(std::move(out));
}

UniPoly unipoly_pow(const UniPoly& f, unsigned r, const Field& field) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "exponent r must be >= 1");
  UniPoly result = f;
  for (unsigned i = 1; i < r; ++i) result = mul(result, f, field);
  return result;
}

std::string format_unipoly(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out << ' ';
    out << f.coeff(i).code();
  }
  return out.str();
}

UniPoly parse_unipoly(std::string_view text, const Field& field) {
  std::vector<FieldElement> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j) {
      throw Error(ErrorKind::ParseError,
                  "bad polynomial coefficient '" + std::string(text.substr(i, j - i)) + "'");
    }
    if (value >= field.order()) {
      throw Error(ErrorKind::ParseError, "coefficient " + std::to_string(value) +
                                             " is not an element of F_" +
                                             std::to_string(field.order()));
    }
    coeffs.emplace_back(value);
    i = j;
  }
  if (coeffs.empty()) throw Error(ErrorKind::ParseError, "empty polynomial text");
  return UniPoly(std::move(coeffs));
}

bool canonical_less(const UniPoly& f, const UniPoly& g) {
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeff(i) != g.coeff(i)) return f.coeff(i) < g.coeff(i);
  }
  return false;
}

std::vector<UniPoly> all_polys_below(std::size_t n, const Field& field) {
  const std::uint32_t q = field.order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= q;
  std::vector<UniPoly> out;
  out.reserve(count);
  std::vector<FieldElement> digits(n);
  for (std::uint64_t index = 0; index < count; ++index) {
    // c_0 is the most significant digit so that index order is canonical order.
    std::uint64_t rest = index;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = FieldElement{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    out.emplace_back(digits);
  }
  return out;
}

}  // namespace slicelab
