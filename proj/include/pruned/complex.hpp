#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pruned/ideal.hpp"

namespace pruned {

// A cell is a subset of the vertex set {1..q}, q <= 64, as a bitmask.
using Cell = std::uint64_t;

// Exact integer scalar for differentials and linear algebra.
using Coeff = boost::multiprecision::cpp_int;

inline int cell_size(Cell c) { return __builtin_popcountll(c); }

// Facets of a simplex cell with the standard simplicial signs: removing the
// k-th smallest vertex carries sign (-1)^{k-1}.
struct Facet {
  Cell cell;
  int sign;
};
std::vector<Facet> boundary(Cell c);

// Sign [c : c \ {v}] for v in c.
int facet_sign(Cell c, int v);

// Practical size caps (the hard mask limit is q = 64).  Overridable through
// environment variables, see caps_from_env().
struct Caps {
  int taylor_q = 22;          // full Taylor complexes materialize 2^q cells
  std::size_t faces = 1u << 21;  // explicit face lists (L^r_q)
  int oracle_q = 20;          // Betti oracle
  std::size_t strand_dense = 600;  // strand size above which the oracle switches route
};
Caps caps_from_env();  // PRUNED_CAP_TAYLOR / PRUNED_CAP_FACES / PRUNED_CAP_ORACLE

// A Z^n-graded simplicial complex on vertices labelled by monomials: either
// the full simplex (Taylor complex of an ideal) or an explicit face list
// (the L^r_q complex and test fixtures).  Faces always include the empty
// cell.  Grading of a cell is the lcm of its vertex monomials.
class CellComplex {
 public:
  // Full Taylor complex on the generators of the ideal.
  static CellComplex taylor(const MonomialIdeal& ideal, const Caps& caps = caps_from_env());
  // Explicit subcomplex; `faces` must be closed under subsets and contain 0.
  static CellComplex subcomplex(MonomialIdeal vertex_monomials, std::vector<Cell> faces);

  int vertex_count() const { return verts_.num_generators(); }
  const MonomialIdeal& vertex_monomials() const { return verts_; }
  const Monomial& vertex_monomial(int j) const { return verts_.generator(j); }  // 0-based

  bool full() const { return !faces_.has_value(); }
  std::size_t cell_count() const;
  bool contains(Cell c) const;
  // Cells in ascending mask order.
  const std::vector<Cell>& cells() const;

  // Multidegree gr(c): lcm of vertex monomials; the empty cell grades to 1.
  Monomial grade(Cell c) const;
  // gr(c) == gr(c + e_j), i.e. vertex j's monomial divides m_c.  O(|supp|).
  bool grade_equal_up(Cell c, int j) const;
  // vertex j's monomial divides lcm of cell c (c may or may not contain j).
  bool vertex_divides(int j, Cell c) const;

 private:
  CellComplex(MonomialIdeal verts, std::optional<std::vector<Cell>> faces);
  void build_divtables();

  MonomialIdeal verts_;
  std::optional<std::vector<Cell>> faces_;  // nullopt = full simplex
  std::unordered_set<Cell> face_set_;
  mutable std::vector<Cell> all_cells_;  // materialized lazily for full complexes
  // div_[j] lists, per variable in supp(m_j), the mask of vertices k with
  // deg_v(m_k) >= deg_v(m_j); m_j | m_c iff c meets every listed mask.
  std::vector<std::vector<Cell>> div_;
};

}  // namespace pruned
