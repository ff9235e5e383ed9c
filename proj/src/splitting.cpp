#include "pruned/splitting.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace pruned {

std::string SplitPlan::to_json() const {
  auto dump = [](auto&& self, const SplitPlan& p) -> nlohmann::json {
    nlohmann::json j;
    if (p.is_leaf()) {
      j["leaf"] = true;
      return j;
    }
    j["leaf"] = false;
    if (p.var > 0) j["var"] = p.var;
    else {
      j["j_part"] = p.j_part;
      j["k_part"] = p.k_part;
    }
    j["children"] = nlohmann::json::array();
    for (const auto& c : p.children) j["children"].push_back(self(self, c));
    return j;
  };
  return dump(dump, *this).dump();
}

SplitPlan SplitPlan::from_json(const std::string& text) {
  auto parse = [](auto&& self, const nlohmann::json& j) -> SplitPlan {
    SplitPlan p;
    if (j.value("leaf", false)) return p;
    if (j.contains("var")) p.var = j.at("var").get<int>();
    else {
      p.j_part = j.at("j_part").get<std::vector<int>>();
      p.k_part = j.at("k_part").get<std::vector<int>>();
    }
    for (const auto& c : j.at("children")) p.children.push_back(self(self, c));
    if (p.children.size() != 3) throw InvalidInputError("split plan: node needs 3 children");
    return p;
  };
  try {
    return parse(parse, nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInputError(std::string("split plan json: ") + ex.what());
  }
}

Partition xi_partition(const MonomialIdeal& ideal, int var) {
  if (var < 1 || var > ideal.ambient()) throw InvalidInputError("xi_partition: bad variable");
  Partition p;
  for (int i = 0; i < ideal.num_generators(); ++i)
    (ideal.generator(i).exponent(var) > 0 ? p.j_idx : p.k_idx).push_back(i);
  return p;
}

IntersectionGens intersection_gens(const MonomialIdeal& ideal, const Partition& parts) {
  IntersectionGens out;
  std::vector<Cell> raw_pairs;
  std::vector<int> k_of;  // K-part generator of each raw lcm
  for (int a : parts.j_idx)
    for (int b : parts.k_idx) {
      out.raw.push_back(lcm(ideal.generator(a), ideal.generator(b)));
      raw_pairs.push_back((Cell{1} << a) | (Cell{1} << b));
      k_of.push_back(b);
    }

  // partial minimalization: divisibility is only decided among lcms sharing
  // the K-part generator (plus exact duplicates anywhere), which is what the
  // domination matching on X' can eliminate
  std::vector<int> survivor(out.raw.size(), -1);  // raw index of a dominating survivor
  std::vector<bool> alive(out.raw.size(), true);
  for (std::size_t i = 0; i < out.raw.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < out.raw.size(); ++j) {
      if (i == j || !alive[j] || !alive[i]) continue;
      bool dominates = (i < j && out.raw[i] == out.raw[j]) ||
                       (k_of[i] == k_of[j] && out.raw[i] != out.raw[j] &&
                        out.raw[i].divides(out.raw[j]));
      if (dominates) {
        alive[j] = false;
        survivor[j] = static_cast<int>(i);
      }
    }
  }
  // a survivor recorded above may itself have been killed later; chase
  for (std::size_t i = 0; i < out.raw.size(); ++i) {
    int s = survivor[i];
    while (s >= 0 && !alive[static_cast<std::size_t>(s)]) s = survivor[static_cast<std::size_t>(s)];
    survivor[i] = s;
  }

  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < out.raw.size(); ++i) {
    if (alive[i]) {
      gens.push_back(out.raw[i]);
      continue;
    }
    Cell p = raw_pairs[i], ps = raw_pairs[static_cast<std::size_t>(survivor[i])];
    Cell fresh = ps & ~p;
    if (fresh == 0) continue;  // same vertex pair (duplicate lcm), nothing to match against
    out.dominations.push_back({p, __builtin_ctzll(fresh)});
  }
  out.ideal = MonomialIdeal(ideal.ambient(), gens);
  return out;
}

bool is_betti_splitting(const MonomialIdeal& ideal, const MonomialIdeal& J, const MonomialIdeal& K,
                        std::int64_t p, const Caps& caps) {
  std::vector<Monomial> inter;
  for (const auto& a : J.generators())
    for (const auto& b : K.generators()) inter.push_back(lcm(a, b));
  auto JK = minimalize(ideal.ambient(), inter);
  auto lhs = betti_numbers(ideal, p, caps);
  auto rhs = betti_numbers(J, p, caps).plus(betti_numbers(K, p, caps));
  if (!JK.is_zero()) rhs = rhs.plus(betti_numbers(JK, p, caps).shifted(1));
  lhs.drop_zeros();
  rhs.drop_zeros();
  return lhs == rhs;
}

namespace {

// direct pruned table; if not minimal and q <= 8, exhaustive order search
BettiTable leaf_table(const MonomialIdeal& ideal, std::int64_t p, const Caps& caps) {
  BettiTable t;
  t.characteristic = p;
  if (ideal.is_zero()) return t;
  auto complex = CellComplex::taylor(ideal, caps);
  auto matching = prune(complex);
  auto morse = morse_complex(complex, matching);
  if (!is_minimal(morse, p) && ideal.num_generators() <= 8) {
    auto search = search_minimal_order(ideal, p, 8, 1, 0, caps);
    if (search.status == OrderSearchResult::Status::found) {
      auto better = CellComplex::taylor(ideal.reordered(search.order), caps);
      auto crit = critical_cells(better, prune(better));
      auto tt = table_from_critical(crit, p);
      tt.characteristic = p;
      return tt;
    }
  }
  auto tt = table_from_critical(morse.strata, p);
  tt.characteristic = p;
  return tt;
}

Partition resolve_parts(const MonomialIdeal& ideal, const SplitPlan& plan) {
  if (plan.var > 0) return xi_partition(ideal, plan.var);
  Partition parts{plan.j_part, plan.k_part};
  std::vector<bool> seen(static_cast<std::size_t>(ideal.num_generators()), false);
  for (const auto* side : {&parts.j_idx, &parts.k_idx})
    for (int i : *side) {
      if (i < 0 || i >= ideal.num_generators() || seen[static_cast<std::size_t>(i)])
        throw InvalidInputError("split plan: parts do not partition the generators");
      seen[static_cast<std::size_t>(i)] = true;
    }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidInputError("split plan: parts do not partition the generators");
  return parts;
}

}  // namespace

BettiTable split_table(const MonomialIdeal& ideal, const SplitPlan& plan, std::int64_t p,
                       const Caps& caps) {
  if (plan.is_leaf()) return leaf_table(ideal, p, caps);
  // degeneracy must be decided on the un-stripped ideal: a split variable
  // shared by every generator (empty K part) would survive into the content
  auto parts = resolve_parts(ideal, plan);
  if (parts.degenerate()) return leaf_table(ideal, p, caps);
  // strip the content so that variable-driven sub-plans see the same
  // partitions on scaled sub-ideals (x_i J, x_i K, ...) as on the originals
  Monomial c = content(ideal);
  if (!c.is_one()) {
    std::vector<Monomial> gens;
    for (const auto& m : ideal.generators()) gens.push_back(m.quotient(c));
    return split_table(MonomialIdeal(ideal.ambient(), gens), plan, p, caps).rescaled(c);
  }
  auto J = ideal.subsequence(parts.j_idx);
  auto K = ideal.subsequence(parts.k_idx);
  auto inter = minimalize(intersection_gens(ideal, parts).ideal);
  auto t = split_table(J, plan.children[0], p, caps)
               .plus(split_table(K, plan.children[1], p, caps));
  if (!inter.is_zero())
    t = t.plus(split_table(inter, plan.children[2], p, caps).shifted(1));
  return t;
}

SplitResult split_prune(const MonomialIdeal& ideal, const SplitPlan& plan, std::int64_t p,
                        const Caps& caps) {
  ideal.require_proper("split_prune");
  SplitResult res;
  auto complex = CellComplex::taylor(ideal, caps);

  if (plan.is_leaf()) {
    res.matching = prune(complex);
  } else {
    auto parts = resolve_parts(ideal, plan);
    if (parts.degenerate()) {
      res.matching = prune(complex);
    } else {
      Cell jmask = 0, kmask = 0;
      for (int i : parts.j_idx) jmask |= Cell{1} << i;
      for (int i : parts.k_idx) kmask |= Cell{1} << i;

      // domination pre-matching on X'
      auto inter = intersection_gens(ideal, parts);
      Matching pre;
      std::unordered_set<Cell> covered;
      int q = ideal.num_generators();
      Cell full = (q >= 64) ? ~Cell{0} : (Cell{1} << q) - 1;
      for (const auto& dom : inter.dominations) {
        Cell wbit = Cell{1} << dom.witness;
        Cell rest = full & ~dom.pair & ~wbit;
        // all supersets of the dropped pair avoiding the witness
        Cell sub = rest;
        while (true) {
          Cell tau = dom.pair | sub;
          if (!covered.count(tau) && !covered.count(tau | wbit)) {
            pre.pairs.push_back({tau, dom.witness});
            covered.insert(tau);
            covered.insert(tau | wbit);
          }
          if (sub == 0) break;
          sub = (sub - 1) & rest;
        }
      }

      auto allowed = [jmask, kmask](Cell c, int dir) {
        Cell bit = Cell{1} << dir;
        if ((c & kmask) == 0) return (bit & jmask) != 0;  // X_J (and the empty cell)
        if ((c & jmask) == 0) return (bit & kmask) != 0;  // X_K
        return true;                                      // X'
      };
      res.matching = prune_partial(complex, allowed, {}, pre);
    }
  }

  res.table = split_table(ideal, plan, p, caps);
  res.table.drop_zeros();
  auto oracle = betti_numbers(ideal, p, caps);
  res.minimal = res.table == oracle;
  return res;
}

namespace {

// The plan is variable-driven, so it applies to any scaling of the certified
// ideal: split_table strips the content before partitioning, and a variable a
// certificate node splits on is never part of the content (its partition is
// nondegenerate).  x_i J cap K = x_i K up to scaling and generator order, so
// K's certificate doubles as the intersection sub-plan.
SplitPlan plan_from_cert_rec(const SplitCertificate& cert) {
  SplitPlan plan;
  if (cert.kind != SplitCertificate::Kind::node) return plan;  // leaf
  plan.var = cert.var;
  plan.children.push_back(plan_from_cert_rec(cert.children[0]));
  plan.children.push_back(plan_from_cert_rec(cert.children[1]));
  plan.children.push_back(plan_from_cert_rec(cert.children[1]));
  return plan;
}

}  // namespace

SplitPlan plan_from_certificate(const MonomialIdeal& ideal, const SplitCertificate& cert) {
  if (cert.kind == SplitCertificate::Kind::node && !validate_certificate(ideal, cert))
    throw InvalidInputError("plan_from_certificate: certificate does not match ideal");
  return plan_from_cert_rec(cert);
}

SplitPlan plan_maxvar(const MonomialIdeal& ideal, int max_depth) {
  SplitPlan plan;
  if (max_depth <= 0 || ideal.num_generators() <= 2) return plan;
  int best_var = 0, best_count = 0;
  for (int v = 1; v <= ideal.ambient(); ++v) {
    auto parts = xi_partition(ideal, v);
    int c = static_cast<int>(parts.j_idx.size());
    if (!parts.degenerate() && c > best_count) {
      best_count = c;
      best_var = v;
    }
  }
  if (best_var == 0) return plan;
  auto parts = xi_partition(ideal, best_var);
  plan.var = best_var;
  plan.children.push_back(plan_maxvar(ideal.subsequence(parts.j_idx), max_depth - 1));
  plan.children.push_back(plan_maxvar(ideal.subsequence(parts.k_idx), max_depth - 1));
  plan.children.push_back(
      plan_maxvar(minimalize(intersection_gens(ideal, parts).ideal), max_depth - 1));
  return plan;
}

// --- edge-ideal recursion --------------------------------------------------

EdgeSplit edge_split_recursion(const Graph& g, int vertex) {
  EdgeSplit out;
  out.vertex = vertex;
  out.neighbors = g.neighbors(vertex);
  std::sort(out.neighbors.begin(), out.neighbors.end());
  for (std::size_t a = 0; a < out.neighbors.size(); ++a)
    for (std::size_t b = a + 1; b < out.neighbors.size(); ++b)
      if (g.has_edge(out.neighbors[a], out.neighbors[b]))
        throw InvalidInputError("edge_split_recursion: neighbors " +
                                std::to_string(out.neighbors[a]) + " and " +
                                std::to_string(out.neighbors[b]) + " are adjacent");

  int n = g.n;
  std::vector<Monomial> jg;
  for (int u : out.neighbors)
    jg.push_back(Monomial::variable(n, u).times(Monomial::variable(n, vertex)));
  out.J = MonomialIdeal(n, jg);
  Graph rest{n, {}};
  for (const auto& [a, b] : g.edges)
    if (a != vertex && b != vertex) rest.edges.push_back({a, b});
  out.K = rest.edges.empty() ? MonomialIdeal(n, {}) : edge_ideal(rest);

  auto in = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // I(H_k): edges avoiding N(v) and N(k), plus the variables of N(k) \ {v}
  auto single = [&](int k) {
    std::vector<int> banned = out.neighbors;
    for (int u : g.neighbors(k))
      if (u != vertex && !in(banned, u)) banned.push_back(u);
    std::vector<Monomial> gens;
    for (const auto& [a, b] : rest.edges)
      if (!in(banned, a) && !in(banned, b))
        gens.push_back(Monomial::variable(n, a).times(Monomial::variable(n, b)));
    for (int u : g.neighbors(k))
      if (u != vertex) gens.push_back(Monomial::variable(n, u));
    return minimalize(n, gens);
  };
  auto intersect = [n](const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const auto& x : a.generators())
      for (const auto& y : b.generators()) gens.push_back(lcm(x, y));
    return minimalize(n, gens);
  };

  // singletons first (the M_k ideals), then all larger subsets; I(H_S) is the
  // intersection of the single-neighbor ideals (a plain union of their
  // generators would miss the mixed edge/transversal terms, e.g. cycle chords)
  std::map<int, MonomialIdeal> singles;
  for (int k : out.neighbors) singles.emplace(k, single(k));
  for (std::size_t mask = 1; mask < (std::size_t{1} << out.neighbors.size()); ++mask) {
    std::vector<int> subset;
    for (std::size_t t = 0; t < out.neighbors.size(); ++t)
      if (mask & (std::size_t{1} << t)) subset.push_back(out.neighbors[t]);
    MonomialIdeal h = singles.at(subset[0]);
    for (std::size_t t = 1; t < subset.size(); ++t) h = intersect(h, singles.at(subset[t]));
    if (subset.size() == 1) {
      Monomial sc = Monomial::variable(n, subset[0]).times(Monomial::variable(n, vertex));
      out.m_ideals.push_back(scale(h, sc));
    }
    out.subsets.push_back(std::move(subset));
    out.hypergraphs.push_back(std::move(h));
  }
  return out;
}

namespace {

BettiTable graph_table(const Graph& g, std::int64_t p, const Caps& caps);

BettiTable ideal_table(const MonomialIdeal& ideal, std::int64_t p, const Caps& caps, int depth) {
  return recursive_table(ideal, p, caps, depth);
}

BettiTable graph_table(const Graph& g, std::int64_t p, const Caps& caps) {
  BettiTable empty;
  empty.characteristic = p;
  if (g.edges.empty()) return empty;
  int n = g.n;

  // dominating vertex: every remaining edge meets its neighborhood
  int best_dom = 0, best_deg = -1;
  for (int v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    bool dom = true;
    for (const auto& [a, b] : g.edges) {
      if (a == v || b == v) continue;
      if (std::find(nb.begin(), nb.end(), a) == nb.end() &&
          std::find(nb.begin(), nb.end(), b) == nb.end()) {
        dom = false;
        break;
      }
    }
    if (dom && static_cast<int>(nb.size()) > best_deg) {
      best_deg = static_cast<int>(nb.size());
      best_dom = v;
    }
  }
  if (best_dom > 0) {
    Graph rest{n, {}};
    for (const auto& [a, b] : g.edges)
      if (a != best_dom && b != best_dom) rest.edges.push_back({a, b});
    std::vector<Monomial> jg;
    for (int u : g.neighbors(best_dom))
      jg.push_back(Monomial::variable(n, u).times(Monomial::variable(n, best_dom)));
    auto t = leaf_table(MonomialIdeal(n, jg), p, caps);
    if (!rest.edges.empty()) {
      auto kt = graph_table(rest, p, caps);
      t = t.plus(kt).plus(kt.rescaled(Monomial::variable(n, best_dom)).shifted(1));
    }
    return t;
  }

  // independent-neighborhood vertex of smallest degree
  int pick = 0, pick_deg = n + 1;
  for (int v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    bool indep = true;
    for (std::size_t a = 0; a < nb.size() && indep; ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (g.has_edge(nb[a], nb[b])) {
          indep = false;
          break;
        }
    if (indep && static_cast<int>(nb.size()) < pick_deg) {
      pick_deg = static_cast<int>(nb.size());
      pick = v;
    }
  }
  if (pick == 0) return ideal_table(edge_ideal(g), p, caps, 1);

  auto split = edge_split_recursion(g, pick);
  auto t = leaf_table(split.J, p, caps);
  if (!split.K.is_zero()) t = t.plus(graph_table(Graph{n, [&] {
                                                   std::vector<std::pair<int, int>> e;
                                                   for (const auto& [a, b] : g.edges)
                                                     if (a != pick && b != pick) e.push_back({a, b});
                                                   return e;
                                                 }()},
                                                 p, caps));
  // intersection x_v J cap K = sum over neighbor subsets S of
  // M_S = x_S x_v I(H_S), combined with one extra shift per extra element
  BettiTable inter;
  inter.characteristic = p;
  for (std::size_t s = 0; s < split.subsets.size(); ++s) {
    if (split.hypergraphs[s].is_zero()) continue;
    Monomial sc = Monomial::variable(n, split.vertex);
    for (int k : split.subsets[s]) sc = sc.times(Monomial::variable(n, k));
    auto ht = ideal_table(split.hypergraphs[s], p, caps, 1).rescaled(sc);
    inter = inter.plus(ht.shifted(static_cast<int>(split.subsets[s].size()) - 1));
  }
  return t.plus(inter.shifted(1));
}

}  // namespace

BettiTable edge_recursion_table(const Graph& g, std::int64_t p, const Caps& caps) {
  auto t = graph_table(g, p, caps);
  t.drop_zeros();
  return t;
}

BettiTable recursive_table(const MonomialIdeal& ideal, std::int64_t p, const Caps& caps,
                           int depth) {
  BettiTable t;
  t.characteristic = p;
  if (ideal.is_zero()) return t;
  if (ideal.num_generators() == 1) {
    t.add(0, ideal.generator(0));
    return t;
  }
  Monomial c = content(ideal);
  if (!c.is_one()) {
    MonomialIdeal stripped(ideal.ambient(), [&] {
      std::vector<Monomial> gens;
      for (const auto& m : ideal.generators()) gens.push_back(m.quotient(c));
      return gens;
    }());
    return recursive_table(stripped, p, caps, depth).rescaled(c);
  }

  auto complex = CellComplex::taylor(ideal, caps);
  auto matching = prune(complex);
  auto morse = morse_complex(complex, matching);
  if (is_minimal(morse, p) || depth > 24) {
    t = table_from_critical(morse.strata, p);
    t.characteristic = p;
    return t;
  }
  if (ideal.num_generators() <= 8) {
    auto search = search_minimal_order(ideal, p, 8, 1, 0, caps);
    if (search.status == OrderSearchResult::Status::found) {
      auto better = CellComplex::taylor(ideal.reordered(search.order), caps);
      auto tt = table_from_critical(critical_cells(better, prune(better)), p);
      tt.characteristic = p;
      return tt;
    }
  }
  int best_var = 0, best_count = 0;
  for (int v = 1; v <= ideal.ambient(); ++v) {
    auto parts = xi_partition(ideal, v);
    int cnt = static_cast<int>(parts.j_idx.size());
    if (!parts.degenerate() && cnt > best_count) {
      best_count = cnt;
      best_var = v;
    }
  }
  if (best_var == 0) {  // cannot split further, return the direct count
    t = table_from_critical(morse.strata, p);
    t.characteristic = p;
    return t;
  }
  auto parts = xi_partition(ideal, best_var);
  auto J = ideal.subsequence(parts.j_idx);
  auto K = ideal.subsequence(parts.k_idx);
  auto inter = minimalize(intersection_gens(ideal, parts).ideal);
  t = recursive_table(J, p, caps, depth + 1).plus(recursive_table(K, p, caps, depth + 1));
  if (!inter.is_zero())
    t = t.plus(recursive_table(inter, p, caps, depth + 1).shifted(1));
  return t;
}

}  // namespace pruned
