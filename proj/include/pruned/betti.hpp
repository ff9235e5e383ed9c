#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pruned/pruning.hpp"

namespace pruned {

// Multigraded Betti numbers of a module (convention: index 0 = generators,
// so beta_i here is beta_{i+1} of the corresponding cyclic quotient).
// `characteristic` records the coefficient field: 0 or a prime p.
struct BettiTable {
  std::int64_t characteristic = 0;
  std::map<int, std::map<Monomial, std::size_t>> entries;

  std::size_t total(int i) const;
  std::size_t at(int i, const Monomial& alpha) const;
  int proj_dim() const { return entries.empty() ? -1 : entries.rbegin()->first; }
  void add(int i, const Monomial& alpha, std::size_t count = 1);
  void drop_zeros();

  // Pointwise sum (characteristics must agree).
  BettiTable plus(const BettiTable& other) const;
  // Homological index shifted up by k.
  BettiTable shifted(int k) const;
  // Every multidegree multiplied by m (undoes content stripping).
  BettiTable rescaled(const Monomial& m) const;

  // Z-graded projection: beta_{i,d}.
  std::map<int, std::map<std::int64_t, std::size_t>> z_graded() const;

  bool operator==(const BettiTable& other) const = default;

  std::string to_json() const;
  static BettiTable from_json(const std::string& text);
};

// Betti diagram in the usual layout (columns = homological index, row r holds
// beta_{i, i+r}), with a totals row and dots for zeros.
std::string render_diagram(const BettiTable& t);

// Independent oracle: Tor ranks from strand-by-strand homology of the Taylor
// complex, computed with exact linear algebra (fraction-free over Z when
// p = 0, mod p otherwise).  Strands larger than caps.strand_dense are routed
// through the nerve of the lower-degree cover instead, which only needs a
// complex on at most n vertices.
BettiTable betti_numbers(const MonomialIdeal& ideal, std::int64_t p = 0,
                         const Caps& caps = caps_from_env());

// Ranks of the ranked chain groups of a matching's critical cells: the graded
// ranks of the pruned resolution (an upper bound for the Betti numbers,
// exact when the pruned complex is minimal).
BettiTable table_from_critical(const CriticalCells& crit, std::int64_t p = 0);

// Reduced simplicial homology ranks of an abstract complex given by its face
// bitmasks (the empty face must be present): H~_{-1}, H~_0, ...  Entries with
// rank zero are omitted.
std::map<int, std::size_t> reduced_homology(const std::vector<Cell>& faces, std::int64_t p = 0);

// Exact rank of an integer matrix (rows x cols), over Q when p = 0, else
// over F_p.  Exposed for tests.
std::size_t matrix_rank(std::vector<std::vector<Coeff>> m, std::int64_t p = 0);

}  // namespace pruned
