#include "pruned/morse.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace pruned {

std::size_t MorseComplex::rank(int i) const {
  auto it = strata.find(i);
  return it == strata.end() ? 0 : it->second.size();
}

namespace {

using Flow = std::map<Cell, Coeff>;  // formal sum over critical cells

// flow(t): t critical -> e_t; t the upper half of a pair -> 0; t the lower
// half -> routed up the reversed edge and back down the other facets.
class FlowSolver {
 public:
  explicit FlowSolver(const Matching& m) {
    for (const auto& p : m.pairs) {
      up_.emplace(p.lower, p.dir);
      is_upper_.insert(p.upper());
    }
  }

  const Flow& flow(Cell start) {
    std::vector<Cell> stack{start};
    while (!stack.empty()) {
      Cell t = stack.back();
      if (memo_.find(t) != memo_.end()) {
        stack.pop_back();
        expanded_.erase(t);
        continue;
      }
      if (is_upper_.count(t)) {
        memo_[t] = {};
        stack.pop_back();
        continue;
      }
      auto it = up_.find(t);
      if (it == up_.end()) {  // critical
        memo_[t] = {{t, Coeff(1)}};
        stack.pop_back();
        continue;
      }
      Cell c = t | (Cell{1} << it->second);
      bool ready = true;
      for (const auto& [f, sign] : boundary(c)) {
        (void)sign;
        if (f == t || memo_.find(f) != memo_.end()) continue;
        stack.push_back(f);
        ready = false;
      }
      if (!ready) {
        // Re-expanding a cell whose dependencies are still pending means we
        // reached it from inside its own subtree: a gradient cycle.
        if (!expanded_.insert(t).second) throw Error("morse flow: cyclic matching");
        continue;
      }
      Coeff back = -facet_sign(c, it->second);  // -1/[c:t], a unit
      Flow acc;
      for (const auto& [f, sign] : boundary(c)) {
        if (f == t) continue;
        Coeff w = back * sign;
        for (const auto& [crit, coeff] : memo_[f]) acc[crit] += w * coeff;
      }
      memo_[t] = std::move(acc);
      stack.pop_back();
      expanded_.erase(t);
    }
    return memo_[start];
  }

 private:
  std::unordered_map<Cell, int> up_;   // lower cell -> direction
  std::unordered_set<Cell> is_upper_;
  std::unordered_map<Cell, Flow> memo_;
  std::unordered_set<Cell> expanded_;
};

}  // namespace

MorseComplex morse_complex(const CellComplex& complex, const Matching& m) {
  MorseComplex out;
  out.strata = critical_cells(complex, m);
  FlowSolver solver(m);
  for (const auto& [i, cells] : out.strata) {
    if (i == 0) continue;
    auto& block = out.diff[i];
    for (const auto& gc : cells) {
      Flow acc;
      for (const auto& [f, sign] : boundary(gc.cell))
        for (const auto& [crit, coeff] : solver.flow(f)) acc[crit] += sign * coeff;
      auto& col = block[gc.cell];
      for (auto& [crit, coeff] : acc) {
        if (coeff == 0) continue;
        col[crit] = {coeff, gc.degree.quotient(complex.grade(crit))};
      }
    }
  }
  return out;
}

std::optional<std::string> verify_complex(const MorseComplex& c) {
  std::unordered_map<Cell, const Monomial*> grade;
  std::unordered_map<Cell, int> level;
  for (const auto& [i, cells] : c.strata)
    for (const auto& gc : cells) {
      grade[gc.cell] = &gc.degree;
      level[gc.cell] = i;
    }

  auto where = [](int i, Cell col, Cell row) {
    std::ostringstream s;
    s << "diff[" << i << "] column " << col << " row " << row;
    return s.str();
  };

  for (const auto& [i, block] : c.diff)
    for (const auto& [col, entries] : block) {
      if (level.find(col) == level.end() || level[col] != i)
        return "diff[" + std::to_string(i) + "]: column " + std::to_string(col) + " not a critical cell of that degree";
      for (const auto& [row, e] : entries) {
        if (level.find(row) == level.end() || level[row] != i - 1)
          return where(i, col, row) + ": row not a critical cell one degree down";
        if (!grade[row]->divides(*grade[col]))
          return where(i, col, row) + ": row degree does not divide column degree";
        if (!(e.mono == grade[col]->quotient(*grade[row])))
          return where(i, col, row) + ": monomial label mismatch";
        if (e.coeff == 0) return where(i, col, row) + ": stored zero entry";
      }
    }

  for (const auto& [i, block] : c.diff) {
    auto lower = c.diff.find(i - 1);
    if (lower == c.diff.end()) continue;
    for (const auto& [col, entries] : block) {
      std::map<Cell, Coeff> acc;
      for (const auto& [mid, e1] : entries) {
        auto mid_col = lower->second.find(mid);
        if (mid_col == lower->second.end()) continue;
        for (const auto& [row, e2] : mid_col->second) acc[row] += e1.coeff * e2.coeff;
      }
      for (const auto& [row, coeff] : acc)
        if (coeff != 0)
          return "d o d != 0 at degree " + std::to_string(i) + ", column " + std::to_string(col) +
                 ", row " + std::to_string(row);
    }
  }
  return std::nullopt;
}

bool is_minimal(const MorseComplex& c, std::int64_t p) {
  for (const auto& [i, block] : c.diff) {
    (void)i;
    for (const auto& [col, entries] : block) {
      (void)col;
      for (const auto& [row, e] : entries) {
        (void)row;
        if (!e.mono.is_one()) continue;
        if (p == 0 || e.coeff % p != 0) return false;
      }
    }
  }
  return true;
}

OrderSearchResult search_minimal_order(const MonomialIdeal& ideal, std::int64_t p,
                                       int exhaustive_limit, std::size_t trials,
                                       std::uint64_t seed, const Caps& caps) {
  int q = ideal.num_generators();
  OrderSearchResult res;
  auto try_order = [&](const std::vector<int>& perm) {
    ++res.attempts;
    auto complex = CellComplex::taylor(ideal.reordered(perm), caps);
    auto morse = morse_complex(complex, prune(complex));
    return is_minimal(morse, p);
  };

  std::vector<int> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  if (try_order(perm)) {
    res.status = OrderSearchResult::Status::found;
    res.order = perm;
    return res;
  }

  if (q <= exhaustive_limit) {
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (try_order(perm)) {
        res.status = OrderSearchResult::Status::found;
        res.order = perm;
        return res;
      }
    }
    res.status = OrderSearchResult::Status::none;
    return res;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 1; t < trials; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    if (try_order(perm)) {
      res.status = OrderSearchResult::Status::found;
      res.order = perm;
      return res;
    }
  }
  res.status = OrderSearchResult::Status::unknown;
  return res;
}

}  // namespace pruned
