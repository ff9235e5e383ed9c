#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "pruned/complex.hpp"

namespace pruned {

// A matched edge: the lower cell c (with vertex `dir` absent) is paired with
// c + e_dir.  dir is a 0-based vertex index.
struct MatchPair {
  Cell lower;
  int dir;

  Cell upper() const { return lower | (Cell{1} << dir); }
  bool operator==(const MatchPair& other) const = default;
};

// A homogeneous acyclic matching on (a region of) a graded cell complex.
struct Matching {
  std::vector<MatchPair> pairs;

  bool covers(Cell c) const;
  // cell -> pair index for both endpoints.
  std::unordered_map<Cell, int> endpoint_index() const;

  std::string to_json() const;
  static Matching from_json(const std::string& text);
};

// Predicate admitting the edge between `lower` and `lower + e_dir`.
using EdgePredicate = std::function<bool(Cell lower, int dir)>;

// Pruning sweep over vertex directions j = 0..q-1 in order (or a supplied
// order): match every surviving homogeneous edge (c, c+e_j); survivors of a
// step never re-enter.  Deterministic: within a step, cells are scanned in
// ascending mask order (candidates are vertex-disjoint, so this only fixes
// the trace).  `pre` seeds the matching before the sweep (its cells count as
// removed); used for the domination matchings of the splitting module.
Matching prune(const CellComplex& complex);
Matching prune_partial(const CellComplex& complex, const EdgePredicate& allowed,
                       const std::vector<int>& order = {}, const Matching& pre = {});

// Diagnostic verification of a foreign or computed matching.
struct MatchingReport {
  bool matching_property = true;
  bool homogeneous = true;
  bool acyclic = true;
  bool cells_in_complex = true;
  std::string detail;              // first failure description
  std::vector<Cell> witness_cycle;  // nonempty when acyclicity fails

  bool ok() const { return matching_property && homogeneous && acyclic && cells_in_complex; }
};
MatchingReport verify_matching(const CellComplex& complex, const Matching& m);

// Critical cells with multidegrees, grouped by homological index (popcount).
struct GradedCell {
  Cell cell;
  Monomial degree;
};
using CriticalCells = std::map<int, std::vector<GradedCell>>;
CriticalCells critical_cells(const CellComplex& complex, const Matching& m);

}  // namespace pruned
