#include "pruned/classes.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace pruned {

namespace {

void require_minimal(const MonomialIdeal& ideal, const char* op) {
  ideal.require_proper(op);
  if (!ideal.is_minimal())
    throw InvalidInputError(std::string(op) + ": generators must be minimal");
}

}  // namespace

bool is_stable(const MonomialIdeal& ideal) {
  require_minimal(ideal, "is_stable");
  for (const auto& m : ideal.generators()) {
    int mx = m.max_var();
    if (mx == 0) continue;
    for (int i = 1; i < mx; ++i)
      if (!ideal.contains(m.quotient(Monomial::variable(m.ambient(), mx))
                              .times(Monomial::variable(m.ambient(), i))))
        return false;
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  require_minimal(ideal, "is_strongly_stable");
  for (const auto& m : ideal.generators())
    for (int j = 1; j <= m.ambient(); ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i)
        if (!ideal.contains(m.quotient(Monomial::variable(m.ambient(), j))
                                .times(Monomial::variable(m.ambient(), i))))
          return false;
    }
  return true;
}

std::vector<Monomial> monomials_of_degree(int n, std::int64_t d) {
  std::vector<Monomial> out;
  std::vector<std::int64_t> exp(static_cast<std::size_t>(n), 0);
  // descending lex: put as much as possible on the smallest index first
  auto rec = [&](auto&& self, int var, std::int64_t rest) -> void {
    if (var == n) {
      exp[static_cast<std::size_t>(n - 1)] = rest;
      out.emplace_back(exp);
      exp[static_cast<std::size_t>(n - 1)] = 0;
      return;
    }
    for (std::int64_t e = rest; e >= 0; --e) {
      exp[static_cast<std::size_t>(var - 1)] = e;
      self(self, var + 1, rest - e);
    }
    exp[static_cast<std::size_t>(var - 1)] = 0;
  };
  if (n >= 1 && d >= 0) rec(rec, 1, d);
  return out;
}

bool is_lexsegment(const MonomialIdeal& ideal) {
  require_minimal(ideal, "is_lexsegment");
  int n = ideal.ambient();
  for (const auto& m : ideal.generators())
    for (const auto& cand : monomials_of_degree(n, m.degree())) {
      if (!cand.lex_greater(m)) break;  // descending lex enumeration
      if (!ideal.contains(cand)) return false;
    }
  return true;
}

namespace {

// (prefix set) : m is generated by variables
bool prime_colon(const MonomialIdeal& ideal, std::uint64_t prefix, int i) {
  std::vector<Monomial> gens;
  for (std::uint64_t rest = prefix; rest; rest &= rest - 1)
    gens.push_back(ideal.generator(__builtin_ctzll(rest))
                       .quotient(gcd(ideal.generator(__builtin_ctzll(rest)), ideal.generator(i))));
  auto colon = minimalize(ideal.ambient(), gens);
  for (const auto& g : colon.generators())
    if (g.degree() != 1) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> linear_quotients_order(const MonomialIdeal& ideal) {
  require_minimal(ideal, "linear_quotients_order");
  int q = ideal.num_generators();
  if (q > 24) throw CapacityError("linear_quotients_order: too many generators");
  std::unordered_set<std::uint64_t> dead;  // prefix sets that cannot be completed
  std::vector<int> order;
  auto rec = [&](auto&& self, std::uint64_t placed) -> bool {
    if (static_cast<int>(order.size()) == q) return true;
    if (dead.count(placed)) return false;
    for (int i = 0; i < q; ++i) {
      if (placed & (std::uint64_t{1} << i)) continue;
      if (placed != 0 && !prime_colon(ideal, placed, i)) continue;
      order.push_back(i);
      if (self(self, placed | (std::uint64_t{1} << i))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (rec(rec, 0)) return order;
  return std::nullopt;
}

std::string SplitCertificate::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::zero: j["kind"] = "zero"; break;
    case Kind::unit: j["kind"] = "unit"; break;
    case Kind::principal: j["kind"] = "principal"; break;
    case Kind::node:
      j["kind"] = "node";
      j["var"] = var;
      j["j_idx"] = j_idx;
      j["k_idx"] = k_idx;
      j["children"] = {nlohmann::json::parse(children[0].to_json()),
                       nlohmann::json::parse(children[1].to_json())};
      break;
  }
  return j.dump();
}

SplitCertificate SplitCertificate::from_json(const std::string& text) {
  auto parse = [](auto&& self, const nlohmann::json& j) -> SplitCertificate {
    SplitCertificate c;
    auto k = j.at("kind").get<std::string>();
    if (k == "zero") c.kind = Kind::zero;
    else if (k == "unit") c.kind = Kind::unit;
    else if (k == "principal") c.kind = Kind::principal;
    else if (k == "node") {
      c.kind = Kind::node;
      c.var = j.at("var").get<int>();
      c.j_idx = j.at("j_idx").get<std::vector<int>>();
      c.k_idx = j.at("k_idx").get<std::vector<int>>();
      for (const auto& ch : j.at("children")) c.children.push_back(self(self, ch));
    } else {
      throw InvalidInputError("certificate: unknown kind");
    }
    return c;
  };
  try {
    return parse(parse, nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInputError(std::string("certificate json: ") + ex.what());
  }
}

namespace {

std::optional<SplitCertificate> vertex_split_rec(const MonomialIdeal& ideal,
                                                std::unordered_map<std::string, int>& memo) {
  SplitCertificate cert;
  if (ideal.is_zero()) {
    cert.kind = SplitCertificate::Kind::zero;
    return cert;
  }
  if (ideal.is_unit()) {
    cert.kind = SplitCertificate::Kind::unit;
    return cert;
  }
  if (ideal.num_generators() == 1) {
    cert.kind = SplitCertificate::Kind::principal;
    return cert;
  }
  std::string key = print_ideal(ideal);
  if (auto it = memo.find(key); it != memo.end() && it->second == 0) return std::nullopt;

  for (int v = 1; v <= ideal.ambient(); ++v) {
    std::vector<int> j_idx, k_idx;
    std::vector<Monomial> j_gens, k_gens;
    Monomial xv = Monomial::variable(ideal.ambient(), v);
    for (int i = 0; i < ideal.num_generators(); ++i) {
      const auto& m = ideal.generator(i);
      if (m.exponent(v) > 0) {
        j_idx.push_back(i);
        j_gens.push_back(m.quotient(xv));
      } else {
        k_idx.push_back(i);
        k_gens.push_back(m);
      }
    }
    if (j_idx.empty()) continue;  // I = K, no progress
    MonomialIdeal J(ideal.ambient(), j_gens), K(ideal.ambient(), k_gens);
    bool contained = true;
    for (const auto& g : k_gens)
      if (!J.contains(g)) {
        contained = false;
        break;
      }
    if (!contained) continue;
    auto cj = vertex_split_rec(J, memo);
    if (!cj) continue;
    auto ck = vertex_split_rec(K, memo);
    if (!ck) continue;
    cert.kind = SplitCertificate::Kind::node;
    cert.var = v;
    cert.j_idx = std::move(j_idx);
    cert.k_idx = std::move(k_idx);
    cert.children = {std::move(*cj), std::move(*ck)};
    memo[key] = 1;
    return cert;
  }
  memo[key] = 0;
  return std::nullopt;
}

}  // namespace

std::optional<SplitCertificate> vertex_split(const MonomialIdeal& ideal) {
  std::unordered_map<std::string, int> memo;
  return vertex_split_rec(ideal, memo);
}

bool validate_certificate(const MonomialIdeal& ideal, const SplitCertificate& cert) {
  switch (cert.kind) {
    case SplitCertificate::Kind::zero: return ideal.is_zero();
    case SplitCertificate::Kind::unit: return ideal.is_unit();
    case SplitCertificate::Kind::principal: return ideal.num_generators() == 1;
    case SplitCertificate::Kind::node: break;
  }
  if (cert.children.size() != 2 || cert.var < 1 || cert.var > ideal.ambient()) return false;
  std::vector<bool> used(static_cast<std::size_t>(ideal.num_generators()), false);
  Monomial xv = Monomial::variable(ideal.ambient(), cert.var);
  std::vector<Monomial> j_gens, k_gens;
  for (int i : cert.j_idx) {
    if (i < 0 || i >= ideal.num_generators() || used[static_cast<std::size_t>(i)]) return false;
    used[static_cast<std::size_t>(i)] = true;
    if (ideal.generator(i).exponent(cert.var) == 0) return false;
    j_gens.push_back(ideal.generator(i).quotient(xv));
  }
  for (int i : cert.k_idx) {
    if (i < 0 || i >= ideal.num_generators() || used[static_cast<std::size_t>(i)]) return false;
    used[static_cast<std::size_t>(i)] = true;
    if (ideal.generator(i).exponent(cert.var) != 0) return false;
    k_gens.push_back(ideal.generator(i));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return false;
  MonomialIdeal J(ideal.ambient(), j_gens), K(ideal.ambient(), k_gens);
  for (const auto& g : k_gens)
    if (!J.contains(g)) return false;
  return validate_certificate(J, cert.children[0]) && validate_certificate(K, cert.children[1]);
}

MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t j) {
  ideal.require_proper("component_ideal");
  std::vector<Monomial> gens;
  for (const auto& m : ideal.generators()) {
    if (m.degree() > j) continue;
    for (const auto& extra : monomials_of_degree(ideal.ambient(), j - m.degree()))
      gens.push_back(m.times(extra));
  }
  return minimalize(ideal.ambient(), gens);
}

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, std::int64_t p,
                                            const Caps& caps) {
  ideal.require_proper("is_componentwise_linear");
  std::int64_t dmin = ideal.generator(0).degree(), dmax = dmin;
  for (const auto& m : ideal.generators()) {
    dmin = std::min(dmin, m.degree());
    dmax = std::max(dmax, m.degree());
  }
  ComponentwiseReport rep;
  rep.unchecked_above = dmax;
  for (std::int64_t j = dmin; j <= dmax; ++j) {
    auto comp = component_ideal(ideal, j);
    if (comp.is_zero()) continue;
    auto table = betti_numbers(comp, p, caps);
    for (const auto& [i, row] : table.z_graded())
      for (const auto& [d, r] : row) {
        (void)r;
        if (d != i + j) {
          rep.linear = false;
          rep.failing_degree = j;
          return rep;
        }
      }
  }
  return rep;
}

}  // namespace pruned
