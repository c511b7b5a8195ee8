#include "slicelab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace slicelab {
namespace {

std::uint32_t fold_exponent(std::uint64_t e, std::uint32_t q) {
  if (e < q) return static_cast<std::uint32_t>(e);
  return static_cast<std::uint32_t>((e - 1) % (q - 1) + 1);
}

void require_same_nvars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::DimensionMismatch,
                "polynomials have " + std::to_string(a.nvars()) + " and " +
                    std::to_string(b.nvars()) + " variables");
  }
}

// Largest reduced-space size for which products accumulate into a dense array.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 20;

}  // namespace

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

MultiPoly MultiPoly::constant(std::size_t nvars, FieldElement c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, const Field& field) {
  if (index >= nvars) {
    throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
  }
  MultiPoly p(nvars);
  Monomial m(nvars);
  m[index] = 1;
  p.terms_.emplace(std::move(m), field.one());
  return p;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement{} : it->second;
}

void MultiPoly::add_term(const Monomial& m, FieldElement c, const Field& field) {
  if (m.nvars() != nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "monomial arity does not match polynomial");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Field& field) {
  require_same_nvars(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c, field);
  return out;
}

MultiPoly scale(const MultiPoly& a, FieldElement c, const Field& field) {
  MultiPoly out(a.nvars());
  for (const auto& [m, v] : a.terms()) out.add_term(m, field.mul(v, c), field);
  return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Field& field) {
  return add(a, scale(b, field.neg(field.one()), field), field);
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Field& field) {
  require_same_nvars(a, b);
  MultiPoly out(a.nvars());
  Monomial prod(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < a.nvars(); ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, field.mul(ca, cb), field);
    }
  }
  return out;
}

MultiPoly reduce_exponents(const MultiPoly& p, const Field& field) {
  const std::uint32_t q = field.order();
  MultiPoly out(p.nvars());
  Monomial folded(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i) folded[i] = fold_exponent(m[i], q);
    out.add_term(folded, c, field);
  }
  return out;
}

MultiPoly multipoly_mul_reduced(const MultiPoly& a, const MultiPoly& b, const Field& field,
                                const Budget& budget) {
  require_same_nvars(a, b);
  const std::size_t n = a.nvars();
  const std::uint32_t q = field.order();
  MultiPoly out(n);
  if (a.is_zero() || b.is_zero()) return out;

  // Reduced monomials are digit strings in base q; with variable 0 most
  // significant, numeric key order is lexicographic monomial order.
  std::uint64_t space = 1;
  bool packable = true;
  for (std::size_t i = 0; i < n && packable; ++i) {
    if (space > (std::uint64_t{1} << 62) / q) packable = false;
    space *= q;
  }

  if (!packable) {
    out = reduce_exponents(mul(a, b, field), field);
  } else {
    std::vector<std::uint64_t> place(n);
    for (std::size_t i = n, w = 1; i-- > 0; w *= q) place[i] = w;

    auto key_of = [&](const Monomial& ma, const Monomial& mb) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < n; ++i) {
        key += fold_exponent(std::uint64_t{ma[i]} + mb[i], q) * place[i];
      }
      return key;
    };

    std::vector<std::pair<std::uint64_t, FieldElement>> collected;
    if (space <= kDenseLimit) {
      std::vector<std::uint32_t> dense(space, 0);
      std::vector<std::uint64_t> touched;
      std::vector<char> seen(space, 0);
      for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
          const std::uint64_t key = key_of(ma, mb);
          dense[key] = field.add(FieldElement{dense[key]}, field.mul(ca, cb)).code();
          if (!seen[key]) {
            seen[key] = 1;
            touched.push_back(key);
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (auto key : touched) {
        if (dense[key] != 0) collected.emplace_back(key, FieldElement{dense[key]});
      }
    } else {
      std::unordered_map<std::uint64_t, FieldElement> sparse;
      for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
          auto& slot = sparse[key_of(ma, mb)];
          slot = field.add(slot, field.mul(ca, cb));
          if (sparse.size() > budget.max_terms) {
            throw Error(ErrorKind::SizeBudgetExceeded,
                        "intermediate product exceeds " + std::to_string(budget.max_terms) +
                            " terms");
          }
        }
      }
      for (const auto& [key, c] : sparse) {
        if (!c.is_zero()) collected.emplace_back(key, c);
      }
      std::sort(collected.begin(), collected.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }

    Monomial m(n);
    for (const auto& [key, c] : collected) {
      std::uint64_t rest = key;
      for (std::size_t i = n; i-- > 0;) {
        m[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      out.add_term(m, c, field);
    }
  }

  if (out.term_count() > budget.max_terms) {
    throw Error(ErrorKind::SizeBudgetExceeded,
                "product has " + std::to_string(out.term_count()) + " terms, budget is " +
                    std::to_string(budget.max_terms));
  }
  return out;
}

FieldElement multipoly_eval(const MultiPoly& p, std::span<const FieldElement> point,
                            const Field& field) {
  if (point.size() != p.nvars()) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                    std::to_string(p.nvars()) + " variables");
  }
  FieldElement sum = field.zero();
  for (const auto& [m, c] : p.terms()) {
    FieldElement term = c;
    for (std::size_t i = 0; i < m.nvars() && !term.is_zero(); ++i) {
      if (m[i] != 0) term = field.mul(term, field.pow(point[i], m[i]));
    }
    sum = field.add(sum, term);
  }
  return sum;
}

FieldElement monomial_eval(const Monomial& m, std::span<const FieldElement> point,
                           const Field& field) {
  if (point.size() != m.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "point and monomial arity differ");
  }
  FieldElement value = field.one();
  for (std::size_t i = 0; i < m.nvars() && !value.is_zero(); ++i) {
    if (m[i] != 0) value = field.mul(value, field.pow(point[i], m[i]));
  }
  return value;
}

std::uint64_t checked_power(std::uint64_t q, std::uint64_t n, std::uint64_t cap,
                            const char* what) {
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (value > cap / q) {
      throw Error(ErrorKind::SizeBudgetExceeded,
                  std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(n) +
                      " exceeds the budget of " + std::to_string(cap));
    }
    value *= q;
  }
  return value;
}

std::vector<FieldElement> point_from_index(std::uint64_t index, std::size_t nvars,
                                           std::uint32_t q) {
  std::vector<FieldElement> point(nvars);
  for (std::size_t i = nvars; i-- > 0;) {
    point[i] = FieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return point;
}

std::vector<FieldElement> function_table(const MultiPoly& p, const Field& field,
                                         const Budget& budget) {
  const std::uint64_t count =
      checked_power(field.order(), p.nvars(), budget.max_points, "function table domain");
  std::vector<FieldElement> table(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const auto point = point_from_index(idx, p.nvars(), field.order());
    table[idx] = multipoly_eval(p, point, field);
  }
  return table;
}

}  // namespace slicelab
