#include "pruned/ideal.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pruned {

MonomialIdeal::MonomialIdeal(int ambient_n, std::vector<Monomial> generators)
    : n_(ambient_n), gens_(std::move(generators)) {
  if (n_ < 0) throw InvalidInputError("negative ambient n");
  for (const auto& g : gens_)
    if (g.ambient() != n_) throw DimensionError("generator ambient mismatch");
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_one(); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_minimal() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (i != j && gens_[i].divides(gens_[j])) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

void MonomialIdeal::require_proper(const char* op) const {
  if (is_zero()) throw InvalidInputError(std::string(op) + ": zero ideal not allowed");
  if (is_unit()) throw InvalidInputError(std::string(op) + ": unit ideal not allowed");
}

MonomialIdeal MonomialIdeal::reordered(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != num_generators())
    throw InvalidInputError("reordered: permutation size mismatch");
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  std::vector<bool> seen(gens_.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= num_generators() || seen[static_cast<std::size_t>(p)])
      throw InvalidInputError("reordered: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
    out.push_back(gens_[static_cast<std::size_t>(p)]);
  }
  return MonomialIdeal(n_, std::move(out));
}

MonomialIdeal MonomialIdeal::subsequence(const std::vector<int>& indices) const {
  std::vector<Monomial> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(gens_.at(static_cast<std::size_t>(i)));
  return MonomialIdeal(n_, std::move(out));
}

MonomialIdeal minimalize(int ambient_n, const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (g.ambient() != ambient_n) throw DimensionError("minimalize: ambient mismatch");
    bool dominated = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (dominated) continue;
    // g may retire earlier survivors it divides.
    std::erase_if(out, [&](const Monomial& h) { return g.divides(h); });
    out.push_back(g);
  }
  // A later generator that strictly divides an earlier one changes the
  // survivor set; redo the first-seen pass so order stays first-seen.
  std::vector<Monomial> final_out;
  for (const auto& g : gens) {
    if (std::find(out.begin(), out.end(), g) == out.end()) continue;
    if (std::find(final_out.begin(), final_out.end(), g) == final_out.end()) final_out.push_back(g);
  }
  return MonomialIdeal(ambient_n, std::move(final_out));
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  return minimalize(ideal.ambient(), ideal.generators());
}

MonomialIdeal restrict_leq(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient() != ideal.ambient()) throw DimensionError("restrict_leq: ambient mismatch");
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators())
    if (g.divides(m)) out.push_back(g);
  return MonomialIdeal(ideal.ambient(), std::move(out));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient() != ideal.ambient()) throw DimensionError("colon: ambient mismatch");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) quotients.push_back(g.quotient(gcd(g, m)));
  return minimalize(ideal.ambient(), quotients);
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) out.push_back(g.times(m));
  return MonomialIdeal(ideal.ambient(), std::move(out));
}

Monomial content(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return Monomial::one(ideal.ambient());
  Monomial c = ideal.generator(0);
  for (int i = 1; i < ideal.num_generators(); ++i) c = gcd(c, ideal.generator(i));
  return c;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("product: ambient mismatch");
  if (a.is_unit()) return minimalize(b);
  if (b.is_unit()) return minimalize(a);
  std::vector<Monomial> gens;
  for (const auto& nb : b.generators())
    for (const auto& ma : a.generators()) gens.push_back(ma.times(nb));
  return minimalize(a.ambient(), gens);
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t r) {
  if (r < 1) throw InvalidInputError("power: r must be >= 1");
  MonomialIdeal out = minimalize(ideal);
  MonomialIdeal base = out;
  for (std::int64_t k = 1; k < r; ++k) out = product(out, base);
  return out;
}

static bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::int64_t p, std::int64_t r) {
  if (!is_prime(p)) throw InvalidInputError("bracket_power: p must be prime");
  if (r < 0) throw InvalidInputError("bracket_power: r must be >= 0");
  std::int64_t e = 1;
  for (std::int64_t k = 0; k < r; ++k) e = checked_mul(e, p);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(e));
  return minimalize(ideal.ambient(), gens);
}

MonomialIdeal artinian_add(const MonomialIdeal& ideal, const std::vector<std::int64_t>& a) {
  if (static_cast<int>(a.size()) != ideal.ambient())
    throw DimensionError("artinian_add: need one exponent per variable");
  std::vector<Monomial> gens = ideal.generators();
  for (int i = 1; i <= ideal.ambient(); ++i) {
    auto ai = a[static_cast<std::size_t>(i - 1)];
    if (ai <= 0) throw InvalidInputError("artinian_add: a_i must be positive");
    gens.push_back(Monomial::variable(ideal.ambient(), i).pow(ai));
  }
  return minimalize(ideal.ambient(), gens);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::has_edge(int a, int b) const {
  for (auto [u, v] : edges)
    if ((u == a && v == b) || (u == b && v == a)) return true;
  return false;
}

static void validate_graph(const Graph& g) {
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > g.n || b < 1 || b > g.n) throw InvalidInputError("graph: vertex out of range");
    if (a == b) throw InvalidInputError("graph: self-loop rejected");
  }
}

Graph path_graph(int n) {
  Graph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInputError("cycle: need n >= 3");
  Graph g = path_graph(n);
  g.edges.emplace_back(n, 1);
  return g;
}

Graph tree_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g{n, edges};
  validate_graph(g);
  if (static_cast<int>(edges.size()) != n - 1) throw InvalidInputError("tree: need n-1 edges");
  // connectivity check
  std::vector<int> stack{1};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++count;
        stack.push_back(u);
      }
  }
  if (count != n) throw InvalidInputError("tree: not connected");
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw InvalidInputError("wheel: need n >= 4");
  Graph g = cycle_graph(n - 1);
  g.n = n;
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, n);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InvalidInputError("complete_bipartite: sides must be >= 1");
  Graph g{a + b, {}};
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) g.edges.emplace_back(i, a + j);
  return g;
}

MonomialIdeal edge_ideal(const Graph& g, bool canonical_order) {
  validate_graph(g);
  auto edges = g.edges;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  if (canonical_order) std::sort(edges.begin(), edges.end());
  std::vector<Monomial> gens;
  for (auto [a, b] : edges)
    gens.push_back(Monomial::variable(g.n, a).times(Monomial::variable(g.n, b)));
  return minimalize(g.n, gens);
}

MonomialIdeal hypergraph_ideal(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<Monomial> gens;
  for (const auto& e : edges) {
    Monomial m = Monomial::one(n);
    for (int v : e) {
      if (v < 1 || v > n) throw InvalidInputError("hypergraph: vertex out of range");
      m = lcm(m, Monomial::variable(n, v));
    }
    if (m.is_one()) throw InvalidInputError("hypergraph: empty edge rejected");
    gens.push_back(m);
  }
  return minimalize(n, gens);
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::string body = text;
  int declared_n = 0;
  auto eq = body.find("n=");
  if (eq != std::string::npos && body.find(';') != std::string::npos &&
      body.find_first_not_of(" \t\r\n") == eq) {
    auto semi = body.find(';');
    declared_n = std::stoi(body.substr(eq + 2, semi - eq - 2));
    if (declared_n < 1) throw InvalidInputError("declared n must be >= 1");
    body = body.substr(semi + 1);
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.find_first_not_of(" \t\r\n") != std::string::npos) parts.push_back(cur);
  std::vector<Monomial> gens;
  int n = declared_n;
  for (const auto& part : parts) {
    Monomial m = parse_monomial(part, declared_n);
    n = std::max(n, m.ambient());
    gens.push_back(m);
  }
  // re-pad to the common ambient
  std::vector<Monomial> padded;
  for (const auto& m : gens) {
    auto e = m.exponents();
    e.resize(static_cast<std::size_t>(n), 0);
    padded.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(padded));
}

std::string print_ideal(const MonomialIdeal& ideal, bool declare_n) {
  std::ostringstream out;
  if (declare_n) out << "n=" << ideal.ambient() << "; ";
  for (int i = 0; i < ideal.num_generators(); ++i) {
    if (i) out << ", ";
    out << ideal.generator(i).str();
  }
  return out.str();
}

MonomialIdeal ideal_from_json(const std::string& json_text) {
  try {
    auto j = nlohmann::json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& row : j.at("gens")) {
      std::vector<std::int64_t> e = row.get<std::vector<std::int64_t>>();
      if (static_cast<int>(e.size()) != n) throw DimensionError("json ideal: bad exponent row length");
      gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInputError(std::string("json ideal: ") + ex.what());
  }
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["n"] = ideal.ambient();
  auto rows = nlohmann::json::array();
  for (const auto& g : ideal.generators()) rows.push_back(g.exponents());
  j["gens"] = rows;
  return j.dump();
}

}  // namespace pruned
