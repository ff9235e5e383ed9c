#include "pruned/power.hpp"

#include <algorithm>

namespace pruned {

std::vector<std::vector<std::int64_t>> power_vertices(int q, std::int64_t r,
                                                      PowerVertexOrder order) {
  if (q < 1 || r < 1) throw InvalidInputError("power_vertices: need q >= 1, r >= 1");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(q), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t rest) -> void {
    if (pos == q - 1) {
      sigma[static_cast<std::size_t>(pos)] = rest;
      out.push_back(sigma);
      sigma[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (std::int64_t e = rest; e >= 0; --e) {
      sigma[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, rest - e);
    }
    sigma[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, r);  // descending lex
  if (order == PowerVertexOrder::corners_first)
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                       return *std::max_element(a.begin(), a.end()) >
                              *std::max_element(b.begin(), b.end());
                     });
  return out;
}

std::vector<std::vector<int>> lrq_facets(int q, std::int64_t r, PowerVertexOrder order) {
  auto verts = power_vertices(q, r, order);
  std::int64_t s = (r + 1) / 2;
  std::int64_t f_cap = std::max(r - 1, s);

  auto collect = [&](auto&& pred) {
    std::vector<int> out;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (pred(verts[k])) out.push_back(static_cast<int>(k));
    return out;
  };
  auto F = [&](int i) {
    return collect([&](const std::vector<std::int64_t>& v) {
      for (int j = 0; j < q; ++j) {
        std::int64_t cap = (j == i) ? f_cap : s;
        if (v[static_cast<std::size_t>(j)] > cap) return false;
      }
      return true;
    });
  };
  auto G = [&](int i) {
    return collect(
        [&](const std::vector<std::int64_t>& v) { return v[static_cast<std::size_t>(i)] >= r - 1; });
  };
  auto B = [&]() {
    return collect([&](const std::vector<std::int64_t>& v) {
      return std::all_of(v.begin(), v.end(), [&](std::int64_t e) { return e <= s; });
    });
  };

  std::vector<std::vector<int>> facets;
  if (r == 1 || q == 1) {
    facets.push_back(collect([](const auto&) { return true; }));
  } else if (r == 2 && q == 2) {
    facets.push_back(G(0));
    facets.push_back(G(1));
  } else if (r == 2 || r == 3) {
    facets.push_back(B());
    for (int i = 0; i < q; ++i) facets.push_back(G(i));
  } else {
    for (int i = 0; i < q; ++i) facets.push_back(F(i));
    for (int i = 0; i < q; ++i) facets.push_back(G(i));
  }
  return facets;
}

PowerComplex lrq_complex(const MonomialIdeal& ideal, std::int64_t r, PowerVertexOrder order,
                         const Caps& caps) {
  ideal.require_proper("lrq_complex");
  if (!ideal.is_squarefree()) throw InvalidInputError("lrq_complex: ideal must be squarefree");
  int q = ideal.num_generators();
  auto verts = power_vertices(q, r, order);
  if (verts.size() > 64) throw CapacityError("lrq_complex: more than 64 vertices");

  std::vector<Monomial> labels;
  for (const auto& sigma : verts) {
    Monomial m = Monomial::one(ideal.ambient());
    for (int k = 0; k < q; ++k)
      if (sigma[static_cast<std::size_t>(k)] > 0)
        m = m.times(ideal.generator(k).pow(sigma[static_cast<std::size_t>(k)]));
    labels.push_back(m);
  }

  std::unordered_set<Cell> faces{0};
  for (const auto& facet : lrq_facets(q, r, order)) {
    Cell top = 0;
    for (int k : facet) top |= Cell{1} << k;
    // all submasks of the facet
    for (Cell sub = top;; sub = (sub - 1) & top) {
      faces.insert(sub);
      if (faces.size() > caps.faces)
        throw CapacityError("lrq_complex: face count exceeds cap (use Taylor pruning of the power)");
      if (sub == 0) break;
    }
  }

  PowerComplex out{std::move(verts),
                   CellComplex::subcomplex(MonomialIdeal(ideal.ambient(), labels),
                                           std::vector<Cell>(faces.begin(), faces.end())),
                   false};
  out.generators_minimal =
      minimalize(ideal.ambient(), labels).num_generators() == static_cast<int>(labels.size());
  return out;
}

PowerResult prune_power(const MonomialIdeal& ideal, std::int64_t r, PowerVertexOrder order,
                        const Caps& caps) {
  PowerResult res{lrq_complex(ideal, r, order, caps), {}, {}};
  res.matching = prune(res.complex.complex);
  res.table = quotient_table(table_from_critical(critical_cells(res.complex.complex, res.matching)),
                             ideal.ambient());
  return res;
}

BettiTable quotient_table(const BettiTable& module_table, int ambient_n) {
  BettiTable out = module_table.shifted(1);
  out.add(0, Monomial::one(ambient_n), 1);
  return out;
}

}  // namespace pruned
