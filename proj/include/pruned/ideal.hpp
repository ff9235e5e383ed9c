#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pruned/monomial.hpp"

namespace pruned {

// A monomial ideal given by an ordered generator list.  The order is part of
// the identity: pruning output is a deterministic function of it, so every
// operation here documents how it treats the order.
class MonomialIdeal {
 public:
  MonomialIdeal() : n_(0) {}
  MonomialIdeal(int ambient_n, std::vector<Monomial> generators);

  int ambient() const { return n_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Monomial>& generators() const { return gens_; }
  const Monomial& generator(int i) const { return gens_.at(static_cast<std::size_t>(i)); }  // 0-based

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  // True if no generator divides another and there are no duplicates.
  bool is_minimal() const;
  // Membership of a monomial in the ideal (divisible by some generator).
  bool contains(const Monomial& m) const;

  // Requires a proper nonzero ideal, otherwise InvalidInputError.
  void require_proper(const char* op) const;

  // Generators reordered by a permutation of {0,..,q-1} (perm[k] = old index of new slot k).
  MonomialIdeal reordered(const std::vector<int>& perm) const;
  // Subsequence of generators by 0-based indices, order preserved as given.
  MonomialIdeal subsequence(const std::vector<int>& indices) const;

  bool operator==(const MonomialIdeal& other) const { return n_ == other.n_ && gens_ == other.gens_; }

 private:
  int n_;
  std::vector<Monomial> gens_;
};

// Removes duplicates and generators divisible by another; keeps first-seen
// relative order of survivors.  Empty input yields the zero ideal.
MonomialIdeal minimalize(int ambient_n, const std::vector<Monomial>& gens);
MonomialIdeal minimalize(const MonomialIdeal& ideal);

// Subideal generated by the generators of I dividing m, original order.
MonomialIdeal restrict_leq(const MonomialIdeal& ideal, const Monomial& m);

// (I : m), minimalized; generated by m_j / gcd(m_j, m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

// m * I (every generator scaled); order preserved.
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m);
// gcd of all generators (the content); unit for the zero ideal.
Monomial content(const MonomialIdeal& ideal);

// --- family constructors; all outputs minimalized -------------------------

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t r);
// J^[p^r] = (m_1^{p^r}, ..., m_q^{p^r}); p prime, r >= 0.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::int64_t p, std::int64_t r);
// I + (x_1^{a_1}, ..., x_n^{a_n}); all a_i > 0.  Powers appended after the
// generators of I, in variable order.
MonomialIdeal artinian_add(const MonomialIdeal& ideal, const std::vector<std::int64_t>& a);

// Simple graph on vertices 1..n; edges stored as given.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> neighbors(int v) const;
  bool has_edge(int a, int b) const;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph tree_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph wheel_graph(int n);  // n-1 rim vertices in a cycle, hub = vertex n
Graph complete_bipartite_graph(int a, int b);

// One generator x_i x_j per edge; canonical order is lexicographic on (i,j)
// unless the edge list order is requested.
MonomialIdeal edge_ideal(const Graph& g, bool canonical_order = true);
// Squarefree hypergraph edge ideal: one generator per vertex subset.
MonomialIdeal hypergraph_ideal(int n, const std::vector<std::vector<int>>& edges);

// --- text / JSON interchange ----------------------------------------------

// `x1*x2, x2*x3^2` with optional `n=K;` prefix declaring the ambient size.
// Without a declaration, n is the largest index appearing.
MonomialIdeal parse_ideal(const std::string& text);
std::string print_ideal(const MonomialIdeal& ideal, bool declare_n = true);

// { "n": int, "gens": [[e1,...,en], ...] } (canonical nlohmann dump).
MonomialIdeal ideal_from_json(const std::string& json_text);
std::string ideal_to_json(const MonomialIdeal& ideal);

}  // namespace pruned
