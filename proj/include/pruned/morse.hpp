#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pruned/pruning.hpp"

namespace pruned {

// One differential entry: coeff * x^{gr(col) - gr(row)} e_row.
struct MorseEntry {
  Coeff coeff;
  Monomial mono;
};

// The Morse chain complex of a matching: critical cells stratified by
// homological degree (cell size) with the induced differentials.  Columns of
// diff[i] are degree-i critical cells, rows are degree i-1.
struct MorseComplex {
  CriticalCells strata;
  std::map<int, std::map<Cell, std::map<Cell, MorseEntry>>> diff;

  int length() const { return strata.empty() ? -1 : strata.rbegin()->first; }
  std::size_t rank(int i) const;
};

// Morse differentials by the gradient-path sum: for a critical cell s,
// d(e_s) = sum over facets s' of [s:s'] * flow(s'), where flow follows the
// reversed matched edges (weight -1/[upper:lower] = +/-1) until a critical
// cell is reached.  Memoized over the acyclic flow graph.
MorseComplex morse_complex(const CellComplex& complex, const Matching& m);

// d o d = 0 plus grading sanity (row degree divides column degree, monomial
// labels consistent).  On failure returns the first offending description.
std::optional<std::string> verify_complex(const MorseComplex& c);

// Minimal over a field of characteristic p (p = 0 or a prime): no entry with
// trivial monomial label survives (mod p when p > 0).
bool is_minimal(const MorseComplex& c, std::int64_t p = 0);

// Search over generator orders for one whose pruned Morse complex is minimal
// in characteristic p.  Exhaustive for q <= exhaustive_limit; otherwise a
// seeded random-restart search within `trials` attempts.
struct OrderSearchResult {
  enum class Status { found, none, unknown };
  Status status = Status::unknown;
  std::vector<int> order;      // permutation (new slot -> old index) when found
  std::size_t attempts = 0;
};
OrderSearchResult search_minimal_order(const MonomialIdeal& ideal, std::int64_t p = 0,
                                       int exhaustive_limit = 8, std::size_t trials = 2000,
                                       std::uint64_t seed = 0,
                                       const Caps& caps = caps_from_env());

}  // namespace pruned
