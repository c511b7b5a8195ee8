#include "slicelab/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace slicelab {
namespace {

// term[i][a] = a_i * member_a^r as a coefficient vector of fixed length, so a
// tuple is a solution iff the slotwise sum of its terms vanishes.
class TermTable {
 public:
  TermTable(const EquationSpec& eq, std::span<const UniPoly> members, const Field& field)
      : field_(field), k_(eq.k) {
    std::size_t len = 1;
    std::vector<std::vector<UniPoly>> polys(eq.k);
    for (std::size_t i = 0; i < eq.k; ++i) {
      for (const auto& f : members) {
        polys[i].push_back(mul(eq.coeffs[i], unipoly_pow(f, eq.r, field), field));
        len = std::max(len, polys[i].back().coeffs().size());
      }
    }
    len_ = len;
    terms_.resize(eq.k);
    for (std::size_t i = 0; i < eq.k; ++i) {
      for (const auto& g : polys[i]) {
        std::vector<FieldElement> v(len_);
        for (std::size_t s = 0; s < g.coeffs().size(); ++s) v[s] = g.coeff(s);
        terms_[i].push_back(std::move(v));
      }
    }
  }

  bool vanishes(std::span<const std::size_t> tuple, std::vector<FieldElement>& scratch) const {
    scratch.assign(len_, FieldElement{});
    for (std::size_t i = 0; i < k_; ++i) {
      const auto& t = terms_[i][tuple[i]];
      for (std::size_t s = 0; s < len_; ++s) scratch[s] = field_.add(scratch[s], t[s]);
    }
    return std::all_of(scratch.begin(), scratch.end(), [](auto x) { return x.is_zero(); });
  }

 private:
  const Field& field_;
  std::size_t k_;
  std::size_t len_ = 1;
  std::vector<std::vector<std::vector<FieldElement>>> terms_;
};

bool all_equal(std::span<const std::size_t> tuple) {
  return std::adjacent_find(tuple.begin(), tuple.end(), std::not_equal_to<>()) == tuple.end();
}

void decode_tuple(std::uint64_t index, std::uint64_t base, std::vector<std::size_t>& tuple) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    tuple[i] = static_cast<std::size_t>(index % base);
    index /= base;
  }
}

std::uint64_t checked_tuple_count(std::uint64_t base, std::size_t k, const Budget& budget,
                                  const char* what) {
  if (base == 0) return 0;
  return checked_power(base, k, budget.max_evaluations, what);
}

// Lowest index in [0, total) whose tuple is a non-trivial solution, or total.
template <typename Pred>
std::uint64_t first_hit(std::uint64_t total, unsigned threads, Pred&& hit) {
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));
  std::vector<std::uint64_t> found(threads, total);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          if (hit(idx)) {
            found[t] = idx;
            return;
          }
        }
      });
    }
  }
  return *std::min_element(found.begin(), found.end());
}

void check_arity(const EquationSpec& eq, std::size_t size) {
  if (size != eq.k) {
    throw Error(ErrorKind::ArityMismatch, "tuple has " + std::to_string(size) +
                                              " entries, equation has k = " +
                                              std::to_string(eq.k));
  }
}

}  // namespace

PolySet::PolySet(std::size_t n, std::vector<UniPoly> members) : n_(n) {
  for (const auto& f : members) {
    if (const auto deg = f.degree(); deg && *deg >= n) {
      throw Error(ErrorKind::DegreeTooLarge, "set member '" + format_unipoly(f) +
                                                 "' has degree >= n = " + std::to_string(n));
    }
  }
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool is_solution(const EquationSpec& eq, std::span<const UniPoly> tuple, const Field& field) {
  check_arity(eq, tuple.size());
  UniPoly sum;
  for (std::size_t i = 0; i < eq.k; ++i) {
    sum = add(sum, mul(eq.coeffs[i], unipoly_pow(tuple[i], eq.r, field), field), field);
  }
  return sum.is_zero();
}

bool is_trivial(std::span<const UniPoly> tuple) {
  return std::adjacent_find(tuple.begin(), tuple.end(), std::not_equal_to<>()) == tuple.end();
}

SolutionReport verify_solution_free(const PolySet& A, const EquationSpec& eq,
                                    const Field& field, const Budget& budget,
                                    const SearchOptions& options) {
  eq.validate(field);
  SolutionReport report;
  if (A.empty()) return report;
  const std::uint64_t base = A.size();
  const std::uint64_t total = checked_tuple_count(base, eq.k, budget, "solution-freeness check");
  const TermTable table(eq, A.members(), field);

  const std::uint64_t hit = first_hit(total, options.threads, [&](std::uint64_t idx) {
    thread_local std::vector<std::size_t> tuple;
    thread_local std::vector<FieldElement> scratch;
    tuple.resize(eq.k);
    decode_tuple(idx, base, tuple);
    return !all_equal(tuple) && table.vanishes(tuple, scratch);
  });

  if (hit == total) {
    report.tuples_examined = total;
    return report;
  }
  std::vector<std::size_t> tuple(eq.k);
  decode_tuple(hit, base, tuple);
  std::vector<UniPoly> witness;
  for (auto i : tuple) witness.push_back(A.members()[i]);
  report.status = SolutionStatus::Witness;
  report.witness = std::move(witness);
  report.tuples_examined = hit + 1;
  return report;
}

MaxFreeResult exhaustive_max_free(std::size_t n, const EquationSpec& eq, const Field& field,
                                  const Budget& budget, const SearchOptions& options) {
  eq.validate(field);
  const std::uint64_t universe_size = checked_power(field.order(), n, 16, "exhaustive subset search (q^n)");
  const std::vector<UniPoly> universe = all_polys_below(n, field);
  const std::uint64_t total = checked_tuple_count(universe_size, eq.k, budget, "exhaustive subset search");
  const TermTable table(eq, universe, field);

  // Supports of all non-trivial solutions; a subset is free iff it contains
  // none of them.
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::set<std::uint32_t>> partial(threads);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        std::vector<std::size_t> tuple(eq.k);
        std::vector<FieldElement> scratch;
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          decode_tuple(idx, universe_size, tuple);
          if (all_equal(tuple) || !table.vanishes(tuple, scratch)) continue;
          std::uint32_t mask = 0;
          for (auto i : tuple) mask |= std::uint32_t{1} << i;
          partial[t].insert(mask);
        }
      });
    }
  }
  std::set<std::uint32_t> merged;
  for (const auto& s : partial) merged.insert(s.begin(), s.end());
  // A proper subset mask is numerically smaller, so one ordered pass keeps
  // exactly the inclusion-minimal supports.
  std::vector<std::uint32_t> bad;
  for (auto mask : merged) {
    const bool redundant =
        std::any_of(bad.begin(), bad.end(), [mask](auto m) { return (m & mask) == m; });
    if (!redundant) bad.push_back(mask);
  }

  MaxFreeResult result;
  const auto N = static_cast<std::size_t>(universe_size);
  for (std::size_t size = N; size >= 1; --size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      ++result.subsets_examined;
      std::uint32_t mask = 0;
      for (auto i : combo) mask |= std::uint32_t{1} << i;
      const bool free = std::none_of(bad.begin(), bad.end(),
                                     [mask](auto b) { return (b & mask) == b; });
      if (free) {
        std::vector<UniPoly> members;
        for (auto i : combo) members.push_back(universe[i]);
        result.size = size;
        result.witness = PolySet(n, std::move(members));
        return result;
      }
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == N - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  result.witness = PolySet(n, {});
  return result;
}

PolySet greedy_free(std::size_t n, const EquationSpec& eq, const Field& field,
                    std::uint64_t seed, const Budget& budget) {
  eq.validate(field);
  const std::uint64_t universe_size =
      checked_power(field.order(), n, budget.max_evaluations, "greedy search universe (q^n)");
  const std::vector<UniPoly> universe = all_polys_below(n, field);
  const TermTable table(eq, universe, field);

  std::vector<std::size_t> order(universe_size);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  // Fisher-Yates with rng() % bound keeps the order identical across
  // standard library implementations.
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }

  std::vector<std::size_t> chosen;
  std::uint64_t spent = 0;
  std::vector<std::size_t> tuple(eq.k);
  std::vector<std::size_t> digits(eq.k);
  std::vector<FieldElement> scratch;
  for (const std::size_t candidate : order) {
    // Tuples over chosen + {candidate} that use the candidate at least once.
    const std::uint64_t base = chosen.size() + 1;
    const std::uint64_t count = checked_power(base, eq.k, budget.max_evaluations, "greedy step");
    spent += count;
    if (spent > budget.max_evaluations) {
      throw Error(ErrorKind::SizeBudgetExceeded,
                  "greedy search exceeds " + std::to_string(budget.max_evaluations) +
                      " tuple evaluations");
    }
    bool clean = true;
    for (std::uint64_t idx = 0; idx < count && clean; ++idx) {
      decode_tuple(idx, base, digits);
      if (std::find(digits.begin(), digits.end(), chosen.size()) == digits.end()) continue;
      for (std::size_t i = 0; i < eq.k; ++i) {
        tuple[i] = digits[i] == chosen.size() ? candidate : chosen[digits[i]];
      }
      if (!all_equal(tuple) && table.vanishes(tuple, scratch)) clean = false;
    }
    if (clean) chosen.push_back(candidate);
  }

  std::vector<UniPoly> members;
  for (auto i : chosen) members.push_back(universe[i]);
  return PolySet(n, std::move(members));
}

}  // namespace slicelab
