#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pruned/betti.hpp"

namespace pruned {

// Exchange-condition classes.  All take a nonzero proper ideal with minimal
// generators and never reorder it.
bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_lexsegment(const MonomialIdeal& ideal);

// A generator order (new slot -> old index) in which every colon ideal
// (m_1,...,m_{i-1}) : m_i is generated by variables; nullopt means no such
// order exists (the subset search is exhaustive).
std::optional<std::vector<int>> linear_quotients_order(const MonomialIdeal& ideal);

// Witness that an ideal is vertex splittable: I = x_i J + K with K contained
// in J, both parts splittable.  j_idx/k_idx are 0-based indices into the
// node's generator list (divisible part / rest); children = {J-cert, K-cert}
// where J is the divisible part with x_i divided out.
struct SplitCertificate {
  enum class Kind { zero, unit, principal, node };
  Kind kind = Kind::zero;
  int var = 0;  // 1-based, node only
  std::vector<int> j_idx, k_idx;
  std::vector<SplitCertificate> children;  // node: exactly {J, K}

  std::string to_json() const;
  static SplitCertificate from_json(const std::string& text);
};

std::optional<SplitCertificate> vertex_split(const MonomialIdeal& ideal);
// Recursive re-check of the certificate invariants against the ideal.
bool validate_certificate(const MonomialIdeal& ideal, const SplitCertificate& cert);

// The degree-j component I_(j) as an ideal: minimal generators of the span
// of all degree-j monomials in I.
MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t j);

// Oracle check that every I_(j) for j in [min gen degree, max gen degree]
// has a linear resolution.  `unchecked_above` reports the cutoff degree:
// components above it are not examined.
struct ComponentwiseReport {
  bool linear = true;
  std::int64_t unchecked_above = 0;
  std::int64_t failing_degree = 0;  // meaningful when !linear
};
ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, std::int64_t p = 0,
                                            const Caps& caps = caps_from_env());

// All monomials of total degree d in n variables, in descending lex order
// (x_1 > x_2 > ...).  Exposed for the lexsegment check and tests.
std::vector<Monomial> monomials_of_degree(int n, std::int64_t d);

}  // namespace pruned
