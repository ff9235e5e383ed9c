#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pruned/betti.hpp"
#include "pruned/classes.hpp"
#include "pruned/morse.hpp"

namespace pruned {

// Recursive splitting plan.  A leaf means "prune directly".  A node carries
// either a partition variable (var > 0, 1-based) or explicit generator index
// sets, plus sub-plans for J, K and J-intersect-K (in that order).
struct SplitPlan {
  int var = 0;
  std::vector<int> j_part, k_part;     // 0-based indices, used when var == 0
  std::vector<SplitPlan> children;     // empty = leaf, else exactly 3

  bool is_leaf() const { return var == 0 && j_part.empty() && k_part.empty(); }

  std::string to_json() const;
  static SplitPlan from_json(const std::string& text);
};

// Order-preserving x_i-partition: first the generators divisible by x_i
// (the J part), then the rest.
struct Partition {
  std::vector<int> j_idx, k_idx;  // 0-based into G(I)
  bool degenerate() const { return j_idx.empty() || k_idx.empty(); }
};
Partition xi_partition(const MonomialIdeal& ideal, int var);

// Oracle check of the splitting formula at every (i, alpha).
bool is_betti_splitting(const MonomialIdeal& ideal, const MonomialIdeal& J, const MonomialIdeal& K,
                        std::int64_t p = 0, const Caps& caps = caps_from_env());

// Pairwise lcms of the two parts in enumeration order (outer: K generator,
// inner: J generator), then minimalized order-preservingly.  For every
// dropped lcm we record its vertex pair in the Taylor complex of I and the
// witness vertex w taken from the pair of its lowest surviving divisor:
// cells containing the dropped pair get pre-matched in direction w.
struct IntersectionGens {
  MonomialIdeal ideal;               // minimalized generators
  std::vector<Monomial> raw;         // all pairwise lcms, enumeration order
  struct Domination {
    Cell pair;    // the two Taylor vertices of the dropped lcm
    int witness;  // Taylor vertex to match against
  };
  std::vector<Domination> dominations;
};
IntersectionGens intersection_gens(const MonomialIdeal& ideal, const Partition& parts);

// Regional pruning of X_J, X_K and X' (cells meeting both
// parts) with the domination pre-matching on X'.  The matching lives on the
// Taylor complex of I and always supports a resolution; `table` is the
// plan-recursive pruned count (leaf tables combined by the splitting
// formula) and `minimal` compares it against the oracle.
struct SplitResult {
  Matching matching;
  BettiTable table;
  bool minimal = false;
};
SplitResult split_prune(const MonomialIdeal& ideal, const SplitPlan& plan, std::int64_t p = 0,
                        const Caps& caps = caps_from_env());

// Plan-recursive pruned table only (no oracle, no top-level matching):
// leaves prune directly and fall back to an exhaustive generator-order
// search (q <= 8) when the direct sweep is not minimal.
BettiTable split_table(const MonomialIdeal& ideal, const SplitPlan& plan, std::int64_t p = 0,
                       const Caps& caps = caps_from_env());

// Automatic plan builders.
SplitPlan plan_from_certificate(const MonomialIdeal& ideal, const SplitCertificate& cert);
SplitPlan plan_maxvar(const MonomialIdeal& ideal, int max_depth = 8);

// --- edge-ideal neighborhood recursion ------------------------------------

// Split data at a vertex whose neighborhood is independent: J = edges at v,
// K = the rest; for every nonempty neighbor subset {k_1,...,k_m} the
// hypergraph ideal I(H_{k_1..k_m}) whose scaling by x_{k_1}...x_{k_m} x_v
// gives the intersection M_{k_1} cap ... cap M_{k_m}.
struct EdgeSplit {
  int vertex;
  std::vector<int> neighbors;
  MonomialIdeal J, K;                       // x_v * (neighbors) and the rest
  std::vector<MonomialIdeal> m_ideals;      // M_k, one per neighbor
  std::vector<std::vector<int>> subsets;    // neighbor subsets, parallel to...
  std::vector<MonomialIdeal> hypergraphs;   // ...their I(H) ideals
};
EdgeSplit edge_split_recursion(const Graph& g, int vertex);

// Pruned Betti table of an edge ideal through the neighborhood recursion:
// wheels/complete-bipartite style vertices (every remaining edge meets the
// neighborhood) use the x_v*K intersection shortcut, independent
// neighborhoods use the M-subset expansion, and base ideals are pruned
// directly (with the q <= 8 order-search fallback).
BettiTable edge_recursion_table(const Graph& g, std::int64_t p = 0,
                                const Caps& caps = caps_from_env());

// Generic recursive pruned table for arbitrary ideals: direct prune if
// minimal, else order search (q <= 8), else best x_i split, recursively.
BettiTable recursive_table(const MonomialIdeal& ideal, std::int64_t p = 0,
                           const Caps& caps = caps_from_env(), int depth = 0);

}  // namespace pruned
