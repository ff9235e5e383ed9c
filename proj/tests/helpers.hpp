#pragma once

#include <random>
#include <set>
#include <vector>

#include "pruned/betti.hpp"
#include "pruned/morse.hpp"

namespace pruned::testing {

// random squarefree ideal with at most q generators (minimalized)
inline MonomialIdeal random_squarefree(std::mt19937_64& rng, int n, int q) {
  std::vector<Monomial> gens;
  std::set<std::uint64_t> seen;
  for (int tries = 0; tries < 20 * q && static_cast<int>(gens.size()) < q; ++tries) {
    std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    if (mask == 0 || !seen.insert(mask).second) continue;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) e[static_cast<std::size_t>(i)] = 1;
    gens.emplace_back(e);
  }
  auto ideal = minimalize(n, gens);
  while (ideal.num_generators() > q) {
    std::vector<int> keep;
    for (int i = 0; i < q; ++i) keep.push_back(i);
    ideal = ideal.subsequence(keep);
  }
  return ideal;
}

// random monomial ideal, arbitrary exponents up to maxdeg per variable
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int q, int maxdeg) {
  std::vector<Monomial> gens;
  for (int tries = 0; tries < 20 * q && static_cast<int>(gens.size()) < q; ++tries) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % (maxdeg + 1));
    Monomial m(e);
    if (m.is_one()) continue;
    gens.push_back(m);
  }
  auto ideal = minimalize(n, gens);
  while (ideal.num_generators() > q) {
    std::vector<int> keep;
    for (int i = 0; i < q; ++i) keep.push_back(i);
    ideal = ideal.subsequence(keep);
  }
  return ideal;
}

// strongly stable (Borel) closure of a seed set
inline MonomialIdeal borel_closure(int n, std::vector<Monomial> seed) {
  std::set<Monomial> all(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Monomial> frontier(all.begin(), all.end());
    for (const auto& m : frontier)
      for (int j = 1; j <= n; ++j) {
        if (m.exponent(j) == 0) continue;
        for (int i = 1; i < j; ++i) {
          auto moved = m.quotient(Monomial::variable(n, j)).times(Monomial::variable(n, i));
          if (all.insert(moved).second) grew = true;
        }
      }
  }
  return minimalize(n, std::vector<Monomial>(all.begin(), all.end()));
}

inline BettiTable pruned_table(const MonomialIdeal& ideal, std::int64_t p = 0) {
  auto complex = CellComplex::taylor(ideal);
  auto t = table_from_critical(critical_cells(complex, prune(complex)), p);
  t.characteristic = p;
  return t;
}

inline std::vector<std::size_t> totals(const BettiTable& t) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= t.proj_dim(); ++i) out.push_back(t.total(i));
  return out;
}

// entrywise pruned >= oracle
inline bool dominates(const BettiTable& upper, const BettiTable& lower) {
  for (const auto& [i, row] : lower.entries)
    for (const auto& [alpha, count] : row)
      if (upper.at(i, alpha) < count) return false;
  return true;
}

// per-multidegree Euler characteristic of critical cells vs the full complex
inline bool euler_preserved(const CellComplex& complex, const CriticalCells& crit) {
  std::map<Monomial, std::int64_t> full, kept;
  for (Cell c : complex.cells())
    if (c != 0) full[complex.grade(c)] += (cell_size(c) % 2 ? 1 : -1);
  for (const auto& [size, cells] : crit) {
    if (size == 0) continue;
    for (const auto& gc : cells) kept[gc.degree] += (size % 2 ? 1 : -1);
  }
  std::erase_if(full, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(kept, [](const auto& kv) { return kv.second == 0; });
  return full == kept;
}

}  // namespace pruned::testing
