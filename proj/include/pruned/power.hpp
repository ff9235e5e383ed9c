#pragma once

#include <cstdint>
#include <vector>

#include "pruned/betti.hpp"
#include "pruned/morse.hpp"

namespace pruned {

// Order of the vertex set N^r_q (multiplicity sequences sigma with |sigma|=r).
// `lex` is descending lexicographic; `corners_first` lists the sequences with
// the largest maximal entry first (ties broken descending-lex), which puts
// the r*e_i "corner" vertices ahead of the mixed ones.
enum class PowerVertexOrder { lex, corners_first };

// All sigma in Z_{>=0}^q with |sigma| = r, in the requested order.
std::vector<std::vector<std::int64_t>> power_vertices(int q, std::int64_t r,
                                                      PowerVertexOrder order);

// Facets of L^r_q as index sets into power_vertices(q, r, order): the
// four-case definition with s = ceil(r/2) (F^r_i and G^r_i for r > 3; B^r and
// G^r_i for r = 3, or r = 2 with q > 2; G^2_1, G^2_2 for r = q = 2; the full
// simplex for r = 1 or q = 1).
std::vector<std::vector<int>> lrq_facets(int q, std::int64_t r, PowerVertexOrder order);

// The graded complex L^r_q for a concrete squarefree ideal: vertex sigma is
// labelled by m_1^{sigma_1}...m_q^{sigma_q}; faces are all subsets of the
// facets, materialized up to caps.faces.
struct PowerComplex {
  std::vector<std::vector<std::int64_t>> vertices;  // the sigma sequences
  CellComplex complex;
  bool generators_minimal;  // whether the vertex labels minimally generate I^r
};
PowerComplex lrq_complex(const MonomialIdeal& ideal, std::int64_t r,
                         PowerVertexOrder order = PowerVertexOrder::lex,
                         const Caps& caps = caps_from_env());

// Pruning sweep restricted to the edges of L^r_q; the returned table is
// for the quotient by I^r (index 0 = the rank-1 free cover).
struct PowerResult {
  PowerComplex complex;
  Matching matching;
  BettiTable table;
};
PowerResult prune_power(const MonomialIdeal& ideal, std::int64_t r,
                        PowerVertexOrder order = PowerVertexOrder::lex,
                        const Caps& caps = caps_from_env());

// R/M table from a module table: shift by one and add the rank-1 degree-0 top.
BettiTable quotient_table(const BettiTable& module_table, int ambient_n);

}  // namespace pruned
