#include "slicelab/slicerank.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace slicelab {
namespace {

MultiPoly power_reduced(const MultiPoly& base, std::uint64_t exponent, const Field& field,
                        const Budget& budget) {
  MultiPoly result = MultiPoly::constant(base.nvars(), field.one());
  MultiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) result = multipoly_mul_reduced(result, square, field, budget);
    exponent >>= 1;
    if (exponent > 0) square = multipoly_mul_reduced(square, square, field, budget);
  }
  return result;
}

std::uint64_t slot_degree(const Monomial& m, std::size_t slot, std::size_t n) {
  std::uint64_t deg = 0;
  for (std::size_t i = slot * n; i < (slot + 1) * n; ++i) deg += m[i];
  return deg;
}

// Splits a point of (F_q^n)^k into X_j and the concatenation of the other slots.
void split_point(std::span<const FieldElement> point, std::size_t slot, std::size_t n,
                 std::vector<FieldElement>& own, std::vector<FieldElement>& others) {
  own.assign(point.begin() + slot * n, point.begin() + (slot + 1) * n);
  others.clear();
  others.insert(others.end(), point.begin(), point.begin() + slot * n);
  others.insert(others.end(), point.begin() + (slot + 1) * n, point.end());
}

// Saturating arithmetic for candidate counts.
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

// Number of multisets of size s drawn from t kinds.
std::uint64_t multiset_count(std::uint64_t t, std::uint64_t s) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    out = sat_mul(out, t + i - 1);
    if (out == kSaturated) return out;
    out /= i;
  }
  return out;
}

}  // namespace

std::size_t SliceCover::size() const {
  std::size_t total = 0;
  for (const auto& slot : slots) total += slot.size();
  return total;
}

MultiPoly indicator_poly(const PolyMap& map, const Field& field, const Budget& budget) {
  checked_power(field.order(), map.nvars_in, budget.max_terms, "indicator polynomial space");
  const MultiPoly one = MultiPoly::constant(map.nvars_in, field.one());
  MultiPoly product = one;
  for (const auto& coord : map.coords) {
    if (coord.is_zero()) continue;
    const MultiPoly raised =
        power_reduced(reduce_exponents(coord, field), field.order() - 1, field, budget);
    product = multipoly_mul_reduced(product, sub(one, raised, field), field, budget);
    if (product.is_zero()) break;
  }
  return product;
}

Rational pigeonhole_threshold(std::uint64_t q, std::uint64_t m, std::uint64_t l,
                              std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return Rational(static_cast<std::int64_t>((q - 1) * m * l), static_cast<std::int64_t>(k));
}

SliceCover build_cover(const MultiPoly& P, std::size_t k, std::size_t n,
                       const Rational& threshold, const Field& field) {
  if (k == 0 || P.nvars() != k * n) {
    throw Error(ErrorKind::DimensionMismatch,
                "polynomial has " + std::to_string(P.nvars()) + " variables, expected k*n = " +
                    std::to_string(k * n));
  }
  SliceCover cover;
  cover.k = k;
  cover.n = n;
  cover.threshold = threshold;
  cover.slots.resize(k);

  for (const auto& [mono, c] : P.terms()) {
    std::size_t slot = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (Rational(static_cast<std::int64_t>(slot_degree(mono, j, n))) <= threshold) {
        slot = j;
        break;
      }
    }
    if (slot == k) {
      throw Error(ErrorKind::NoAdmissibleSlot,
                  "monomial of total degree " + std::to_string(mono.total_degree()) +
                      " exceeds threshold " + format_rational(threshold) + " in every slot");
    }
    std::vector<std::uint32_t> own(mono.exponents().begin() + slot * n,
                                   mono.exponents().begin() + (slot + 1) * n);
    std::vector<std::uint32_t> rest(mono.exponents().begin(),
                                    mono.exponents().begin() + slot * n);
    rest.insert(rest.end(), mono.exponents().begin() + (slot + 1) * n, mono.exponents().end());
    auto [it, inserted] =
        cover.slots[slot].try_emplace(Monomial(std::move(own)), MultiPoly((k - 1) * n));
    it->second.add_term(Monomial(std::move(rest)), c, field);
  }
  return cover;
}

FieldElement cover_eval(const SliceCover& cover, std::span<const FieldElement> point,
                        const Field& field) {
  if (point.size() != cover.k * cover.n) {
    throw Error(ErrorKind::DimensionMismatch, "point does not match cover dimensions");
  }
  FieldElement sum = field.zero();
  std::vector<FieldElement> own;
  std::vector<FieldElement> others;
  for (std::size_t j = 0; j < cover.k; ++j) {
    if (cover.slots[j].empty()) continue;
    split_point(point, j, cover.n, own, others);
    for (const auto& [p, cofactor] : cover.slots[j]) {
      const FieldElement pv = monomial_eval(p, own, field);
      if (pv.is_zero()) continue;
      sum = field.add(sum, field.mul(pv, multipoly_eval(cofactor, others, field)));
    }
  }
  return sum;
}

CoverVerdict verify_cover(const MultiPoly& P, const SliceCover& cover, const Field& field,
                          const VerifyOptions& options, const Budget& budget) {
  const std::size_t nvars = cover.k * cover.n;
  if (P.nvars() != nvars || cover.slots.size() != cover.k) {
    throw Error(ErrorKind::DimensionMismatch, "polynomial and cover dimensions disagree");
  }
  const std::uint32_t q = field.order();
  CoverVerdict verdict;
  verdict.mode = options.mode;

  auto mismatch_at = [&](std::span<const FieldElement> point) {
    return multipoly_eval(P, point, field) != cover_eval(cover, point, field);
  };

  if (options.mode == VerifyMode::Sampled) {
    if (options.samples > budget.max_points) {
      throw Error(ErrorKind::SizeBudgetExceeded,
                  "cover verification samples: " + std::to_string(options.samples) +
                      " exceeds the budget of " + std::to_string(budget.max_points));
    }
    std::mt19937_64 rng(options.seed);
    std::vector<FieldElement> point(nvars);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      for (auto& x : point) x = FieldElement{static_cast<std::uint32_t>(rng() % q)};
      ++verdict.points_checked;
      if (mismatch_at(point)) {
        verdict.pass = false;
        verdict.witness = point;
        return verdict;
      }
    }
    return verdict;
  }

  const std::uint64_t total = checked_power(q, nvars, budget.max_points, "cover verification domain");
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(total, 1)));
  std::vector<std::uint64_t> first_bad(threads, total);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          if (mismatch_at(point_from_index(idx, nvars, q))) {
            first_bad[t] = idx;
            return;
          }
        }
      });
    }
  }
  const std::uint64_t bad = *std::min_element(first_bad.begin(), first_bad.end());
  if (bad < total) {
    verdict.pass = false;
    verdict.witness = point_from_index(bad, nvars, q);
    verdict.points_checked = bad + 1;
  } else {
    verdict.points_checked = total;
  }
  return verdict;
}

std::size_t matrix_rank(FieldMatrix matrix, const Field& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < matrix.cols && rank < matrix.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < matrix.rows && matrix.at(pivot, col).is_zero()) ++pivot;
    if (pivot == matrix.rows) continue;
    for (std::size_t j = 0; j < matrix.cols; ++j) {
      std::swap(matrix.at(pivot, j), matrix.at(rank, j));
    }
    const FieldElement inv = field.inv(matrix.at(rank, col));
    for (std::size_t j = 0; j < matrix.cols; ++j) {
      matrix.at(rank, j) = field.mul(matrix.at(rank, j), inv);
    }
    for (std::size_t i = 0; i < matrix.rows; ++i) {
      if (i == rank || matrix.at(i, col).is_zero()) continue;
      const FieldElement factor = matrix.at(i, col);
      for (std::size_t j = 0; j < matrix.cols; ++j) {
        matrix.at(i, j) = field.sub(matrix.at(i, j), field.mul(factor, matrix.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t diagonal_rank_k2(std::size_t s, const Field& field) {
  FieldMatrix identity{s, s, std::vector<FieldElement>(s * s)};
  for (std::size_t i = 0; i < s; ++i) identity.at(i, i) = field.one();
  return matrix_rank(std::move(identity), field);
}

MultiPoly delta_poly(std::span<const FieldElement> f, const Field& field) {
  const std::size_t n = f.size();
  const MultiPoly one = MultiPoly::constant(n, field.one());
  MultiPoly out = one;
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly shifted =
        sub(MultiPoly::variable(n, i, field), MultiPoly::constant(n, f[i]), field);
    const MultiPoly raised = power_reduced(shifted, field.order() - 1, field, Budget{});
    out = multipoly_mul_reduced(out, sub(one, raised, field), field);
  }
  return out;
}

MultiPoly diagonal_indicator(std::span<const std::vector<FieldElement>> A, std::size_t k,
                             const Field& field, const Budget& budget) {
  if (A.empty()) return MultiPoly(0);
  const std::size_t n = A.front().size();
  const std::size_t total = k * n;
  MultiPoly out(total);
  for (const auto& f : A) {
    if (f.size() != n) throw Error(ErrorKind::DimensionMismatch, "points of A differ in length");
    const MultiPoly delta = delta_poly(f, field);
    MultiPoly product = MultiPoly::constant(total, field.one());
    for (std::size_t j = 0; j < k; ++j) {
      MultiPoly lifted(total);
      for (const auto& [m, c] : delta.terms()) {
        std::vector<std::uint32_t> exps(total, 0);
        std::copy(m.exponents().begin(), m.exponents().end(), exps.begin() + j * n);
        lifted.add_term(Monomial(std::move(exps)), c, field);
      }
      product = multipoly_mul_reduced(product, lifted, field, budget);
    }
    out = add(out, product, field);
  }
  return out;
}

std::size_t slice_rank_exhaustive(std::span<const FieldElement> table, std::size_t k,
                                  std::size_t n, const Field& field, const Budget& budget) {
  const std::uint32_t q = field.order();
  const std::uint64_t slot_domain = checked_power(q, n, budget.max_points, "slot domain");
  const std::uint64_t cof_domain =
      checked_power(slot_domain, k - 1, budget.max_points, "cofactor domain");
  const std::uint64_t full_domain =
      checked_power(slot_domain, k, budget.max_points, "slice rank domain");
  if (table.size() != full_domain) {
    throw Error(ErrorKind::DimensionMismatch, "function table has the wrong size");
  }
  if (std::all_of(table.begin(), table.end(), [](auto v) { return v.is_zero(); })) return 0;

  const std::uint64_t slot_functions = sat_pow(q, slot_domain);
  const std::uint64_t cof_functions = sat_pow(q, cof_domain);
  if (slot_functions == kSaturated || cof_functions == kSaturated) {
    throw Error(ErrorKind::SizeBudgetExceeded, "function spaces too large for exhaustive search");
  }
  auto decode = [q](std::uint64_t code, std::uint64_t len) {
    std::vector<FieldElement> values(len);
    for (std::uint64_t i = 0; i < len; ++i) {
      values[i] = FieldElement{static_cast<std::uint32_t>(code % q)};
      code /= q;
    }
    return values;
  };

  // (slot, nonzero slot function) pairs.
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> kinds;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::uint64_t code = 1; code < slot_functions; ++code) {
      kinds.emplace_back(j, decode(code, slot_domain));
    }
  }
  std::vector<std::vector<FieldElement>> cofactors;
  cofactors.reserve(cof_functions);
  for (std::uint64_t code = 0; code < cof_functions; ++code) {
    cofactors.push_back(decode(code, cof_domain));
  }

  // For each point: its slot values and, per slot, the index of the others.
  std::vector<std::vector<std::uint64_t>> own(full_domain, std::vector<std::uint64_t>(k));
  std::vector<std::vector<std::uint64_t>> rest(full_domain, std::vector<std::uint64_t>(k));
  for (std::uint64_t idx = 0; idx < full_domain; ++idx) {
    std::vector<std::uint64_t> x(k);
    std::uint64_t r = idx;
    for (std::size_t j = k; j-- > 0;) {
      x[j] = r % slot_domain;
      r /= slot_domain;
    }
    for (std::size_t j = 0; j < k; ++j) {
      own[idx][j] = x[j];
      std::uint64_t other = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != j) other = other * slot_domain + x[i];
      }
      rest[idx][j] = other;
    }
  }

  std::uint64_t spent = 0;
  for (std::size_t size = 1;; ++size) {
    const std::uint64_t candidates =
        sat_mul(multiset_count(kinds.size(), size), sat_pow(cof_functions, size));
    if (candidates == kSaturated || spent + candidates > budget.max_evaluations) {
      throw Error(ErrorKind::SizeBudgetExceeded,
                  "exhaustive slice rank search at size " + std::to_string(size) + " needs " +
                      (candidates == kSaturated ? std::string("too many")
                                                : std::to_string(candidates)) +
                      " candidate covers, budget is " + std::to_string(budget.max_evaluations));
    }
    spent += candidates;

    std::vector<std::size_t> choice(size, 0);
    while (true) {
      std::vector<std::size_t> cof(size, 0);
      while (true) {
        bool match = true;
        for (std::uint64_t idx = 0; idx < full_domain && match; ++idx) {
          FieldElement v = field.zero();
          for (std::size_t t = 0; t < size; ++t) {
            const auto& [slot, fn] = kinds[choice[t]];
            v = field.add(v, field.mul(fn[own[idx][slot]], cofactors[cof[t]][rest[idx][slot]]));
          }
          match = v == table[idx];
        }
        if (match) return size;
        std::size_t t = 0;
        while (t < size && ++cof[t] == cofactors.size()) cof[t++] = 0;
        if (t == size) break;
      }
      // Next nondecreasing choice sequence.
      std::size_t t = size;
      while (t > 0 && choice[t - 1] == kinds.size() - 1) --t;
      if (t == 0) break;
      ++choice[t - 1];
      for (std::size_t u = t; u < size; ++u) choice[u] = choice[t - 1];
    }
  }
}

}  // namespace slicelab
