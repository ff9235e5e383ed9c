#include "pruned/pruning.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pruned {

bool Matching::covers(Cell c) const {
  for (const auto& p : pairs)
    if (p.lower == c || p.upper() == c) return true;
  return false;
}

std::unordered_map<Cell, int> Matching::endpoint_index() const {
  std::unordered_map<Cell, int> idx;
  idx.reserve(pairs.size() * 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    idx[pairs[i].lower] = static_cast<int>(i);
    idx[pairs[i].upper()] = static_cast<int>(i);
  }
  return idx;
}

std::string Matching::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& p : pairs) j.push_back({{"cell", p.lower}, {"dir", p.dir}});
  return j.dump();
}

Matching Matching::from_json(const std::string& text) {
  try {
    Matching m;
    for (const auto& e : nlohmann::json::parse(text))
      m.pairs.push_back({e.at("cell").get<Cell>(), e.at("dir").get<int>()});
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInputError(std::string("matching json: ") + ex.what());
  }
}

namespace {

// Liveness bookkeeping: a flat bitmap for full complexes, a hash set of dead
// cells otherwise.
class Alive {
 public:
  explicit Alive(const CellComplex& complex) : complex_(complex) {
    if (complex.full()) flat_.assign(complex.cell_count(), 1);
  }

  bool alive(Cell c) const {
    if (!complex_.contains(c)) return false;
    if (!flat_.empty()) return flat_[c] != 0;
    return dead_.find(c) == dead_.end();
  }

  void kill(Cell c) {
    if (!flat_.empty())
      flat_[c] = 0;
    else
      dead_.insert(c);
  }

 private:
  const CellComplex& complex_;
  std::vector<std::uint8_t> flat_;
  std::unordered_set<Cell> dead_;
};

}  // namespace

Matching prune_partial(const CellComplex& complex, const EdgePredicate& allowed,
                       const std::vector<int>& order, const Matching& pre) {
  int q = complex.vertex_count();
  std::vector<int> sweep = order;
  if (sweep.empty()) {
    sweep.resize(static_cast<std::size_t>(q));
    std::iota(sweep.begin(), sweep.end(), 0);
  }

  Matching m = pre;
  Alive alive(complex);
  for (const auto& p : m.pairs) {
    alive.kill(p.lower);
    alive.kill(p.upper());
  }

  for (int j : sweep) {
    Cell bit = Cell{1} << j;
    // Candidate pairs at step j are vertex-disjoint (c <-> c ^ e_j is an
    // involution), so they can all be matched in one pass.
    for (Cell c : complex.cells()) {
      if (c & bit) continue;
      if (!alive.alive(c) || !alive.alive(c | bit)) continue;
      if (!complex.grade_equal_up(c, j)) continue;
      if (allowed && !allowed(c, j)) continue;
      m.pairs.push_back({c, j});
      alive.kill(c);
      alive.kill(c | bit);
    }
  }
  return m;
}

Matching prune(const CellComplex& complex) { return prune_partial(complex, nullptr); }

MatchingReport verify_matching(const CellComplex& complex, const Matching& m) {
  MatchingReport rep;
  auto fail = [&rep](bool& flag, const std::string& why) {
    flag = false;
    if (rep.detail.empty()) rep.detail = why;
  };

  std::unordered_map<Cell, int> seen;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const auto& p = m.pairs[i];
    Cell up = p.upper();
    std::ostringstream tag;
    tag << "pair " << i << " (" << p.lower << " + e_" << p.dir << ")";
    if (p.dir < 0 || p.dir >= complex.vertex_count() || (p.lower & (Cell{1} << p.dir))) {
      fail(rep.matching_property, tag.str() + ": invalid direction");
      continue;
    }
    if (!complex.contains(p.lower) || !complex.contains(up))
      fail(rep.cells_in_complex, tag.str() + ": cell not in complex");
    if (!complex.grade_equal_up(p.lower, p.dir))
      fail(rep.homogeneous, tag.str() + ": multidegrees differ");
    for (Cell c : {p.lower, up}) {
      auto [it, inserted] = seen.emplace(c, static_cast<int>(i));
      if (!inserted && it->second != static_cast<int>(i))
        fail(rep.matching_property, tag.str() + ": cell also in pair " + std::to_string(it->second));
    }
  }
  if (!rep.matching_property || !rep.cells_in_complex) return rep;

  // Acyclicity on the condensed digraph: one node per matched pair, an edge
  // P -> Q whenever lower(Q) is a facet of upper(P).  A directed cycle here
  // is exactly a gradient cycle of the reversed matching.
  std::unordered_map<Cell, int> by_lower;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) by_lower[m.pairs[i].lower] = static_cast<int>(i);
  auto successors = [&](int i) {
    std::vector<int> out;
    for (const auto& [f, sign] : boundary(m.pairs[static_cast<std::size_t>(i)].upper())) {
      (void)sign;
      if (f == m.pairs[static_cast<std::size_t>(i)].lower) continue;
      auto it = by_lower.find(f);
      if (it != by_lower.end()) out.push_back(it->second);
    }
    return out;
  };

  int n = static_cast<int>(m.pairs.size());
  std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n && rep.acyclic; ++root) {
    if (color[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    std::vector<std::vector<int>> succ_cache;
    color[static_cast<std::size_t>(root)] = 1;
    succ_cache.push_back(successors(root));
    while (!stack.empty() && rep.acyclic) {
      auto& [v, next] = stack.back();
      const auto& succ = succ_cache[stack.size() - 1];
      if (next == succ.size()) {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        succ_cache.pop_back();
        continue;
      }
      int w = succ[next++];
      if (color[static_cast<std::size_t>(w)] == 1) {
        // cycle: walk back from v to w through the stack
        fail(rep.acyclic, "gradient cycle through pair " + std::to_string(w));
        std::vector<Cell> cyc;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cyc.push_back(m.pairs[static_cast<std::size_t>(it->first)].upper());
          cyc.push_back(m.pairs[static_cast<std::size_t>(it->first)].lower);
          if (it->first == w) break;
        }
        std::reverse(cyc.begin(), cyc.end());
        rep.witness_cycle = std::move(cyc);
      } else if (color[static_cast<std::size_t>(w)] == 0) {
        color[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back({w, 0});
        succ_cache.push_back(successors(w));
      }
    }
  }
  return rep;
}

CriticalCells critical_cells(const CellComplex& complex, const Matching& m) {
  auto idx = m.endpoint_index();
  CriticalCells out;
  for (Cell c : complex.cells()) {
    if (idx.find(c) != idx.end()) continue;
    out[cell_size(c)].push_back({c, complex.grade(c)});
  }
  return out;
}

}  // namespace pruned
