#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pruned/splitting.hpp"

using namespace pruned;
using namespace pruned::testing;

TEST_CASE("variable partitions") {
  auto ideal = parse_ideal("x1^2, x1*x2, x2^2");
  auto p1 = xi_partition(ideal, 1);
  CHECK(p1.j_idx == std::vector<int>({0, 1}));
  CHECK(p1.k_idx == std::vector<int>({2}));
  CHECK_FALSE(p1.degenerate());
  auto p2 = xi_partition(ideal, 2);
  CHECK(p2.j_idx == std::vector<int>({1, 2}));
  auto all_j = xi_partition(parse_ideal("x1*x2, x1*x3"), 1);
  CHECK(all_j.degenerate());
}

TEST_CASE("nine-cycle intersection generators") {
  auto ideal = edge_ideal(cycle_graph(9));
  auto parts = xi_partition(ideal, 9);
  CHECK(parts.j_idx == std::vector<int>({1, 8}));  // x1*x9 and x8*x9
  auto inter = intersection_gens(ideal, parts);
  CHECK(inter.raw.size() == 14);
  CHECK(inter.ideal.num_generators() == 12);
  // exactly these two lcms are dropped
  auto dropped1 = parse_monomial("x1*x2*x8*x9", 9);
  auto dropped2 = parse_monomial("x1*x7*x8*x9", 9);
  const auto& kept = inter.ideal.generators();
  CHECK(std::find(kept.begin(), kept.end(), dropped1) == kept.end());
  CHECK(std::find(kept.begin(), kept.end(), dropped2) == kept.end());
  REQUIRE(inter.dominations.size() == 2);
  for (const auto& d : inter.dominations) {
    CHECK(cell_size(d.pair) == 2);
    CHECK((d.pair & (Cell{1} << d.witness)) == 0);
  }
}

TEST_CASE("betti splitting oracle check") {
  // x1-partition of the square of the maximal ideal is a splitting...
  auto ideal = parse_ideal("x1^2, x1*x2, x2^2");
  CHECK(is_betti_splitting(ideal, ideal.subsequence({0, 1}), ideal.subsequence({2})));
  // ...but J = (x1*x2) alone is not (the formula inflates beta_1 to 3)
  CHECK_FALSE(is_betti_splitting(ideal, ideal.subsequence({1}), ideal.subsequence({0, 2})));
  // disjoint variable supports always split
  auto disjoint = parse_ideal("n=4; x1*x2, x3*x4");
  CHECK(is_betti_splitting(disjoint, disjoint.subsequence({0}), disjoint.subsequence({1})));
  // vertex partitions of edge ideals split
  auto c5 = edge_ideal(cycle_graph(5));
  auto parts = xi_partition(c5, 5);
  CHECK(is_betti_splitting(c5, c5.subsequence(parts.j_idx), c5.subsequence(parts.k_idx)));
}

TEST_CASE("split pruning through explicit, certificate and maxvar plans") {
  auto ideal = parse_ideal("x1^2, x1*x2, x2^2");
  auto cert = vertex_split(ideal);
  REQUIRE(cert.has_value());
  for (const SplitPlan& plan : {plan_from_certificate(ideal, *cert), plan_maxvar(ideal)}) {
    auto result = split_prune(ideal, plan);
    CHECK(result.minimal);
    CHECK(result.table == betti_numbers(ideal));
    CHECK(verify_matching(CellComplex::taylor(ideal), result.matching).ok());
  }
}

TEST_CASE("nine-cycle splits to the minimal resolution") {
  auto ideal = edge_ideal(cycle_graph(9));
  auto result = split_prune(ideal, plan_maxvar(ideal));
  CHECK(result.minimal);
  CHECK(verify_matching(CellComplex::taylor(ideal), result.matching).ok());
}

TEST_CASE("split plan json round trip") {
  auto plan = plan_maxvar(parse_ideal("x1^2, x1*x2, x2^2"));
  auto back = SplitPlan::from_json(plan.to_json());
  CHECK(back.var == plan.var);
  CHECK(back.children.size() == plan.children.size());
  CHECK_THROWS_AS(SplitPlan::from_json("{\"children\": []}"), InvalidInputError);
}

TEST_CASE("edge split at an independent neighborhood") {
  auto g = cycle_graph(6);
  auto split = edge_split_recursion(g, 1);  // N(1) = {2, 6}, independent
  CHECK(split.vertex == 1);
  CHECK(split.neighbors == std::vector<int>({2, 6}));
  CHECK(split.J == parse_ideal("n=6; x1*x2, x1*x6"));
  CHECK(split.K == parse_ideal("n=6; x2*x3, x3*x4, x4*x5, x5*x6"));
  REQUIRE(split.subsets.size() == 3);  // {2}, {6}, {2,6}
  // hub of a wheel has a dependent neighborhood
  CHECK_THROWS_AS(edge_split_recursion(wheel_graph(5), 5), InvalidInputError);
}

TEST_CASE("edge recursion matches the oracle on small families") {
  for (const Graph& g : {path_graph(6), cycle_graph(6), wheel_graph(5),
                         complete_bipartite_graph(2, 3)}) {
    auto ideal = edge_ideal(g);
    CHECK(edge_recursion_table(g) == betti_numbers(ideal));
  }
}

TEST_CASE("generic recursive tables match the oracle") {
  std::mt19937_64 rng(1213);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal ideal = (trial % 2 == 0) ? random_squarefree(rng, 3 + trial % 5, 2 + trial % 5)
                                           : random_ideal(rng, 3 + trial % 3, 2 + trial % 4, 3);
    if (ideal.is_zero() || ideal.is_unit()) continue;
    ideal = minimalize(ideal);
    CHECK(recursive_table(ideal) == betti_numbers(ideal));
  }
}

TEST_CASE("restriction: an untouched last generator splits off cleanly") {
  std::mt19937_64 rng(1415);
  int checked = 0;
  for (int trial = 0; trial < 120 && checked < 20; ++trial) {
    auto ideal = random_squarefree(rng, 3 + trial % 5, 3 + trial % 4);
    if (ideal.num_generators() < 3 || ideal.is_unit()) continue;
    int q = ideal.num_generators();
    auto complex = CellComplex::taylor(ideal);
    auto m = prune(complex);
    bool touched_last = false;
    for (const auto& p : m.pairs)
      if (p.dir == q - 1 || (p.lower & (Cell{1} << (q - 1)))) touched_last = true;
    if (touched_last) continue;
    ++checked;
    // then the matching restricted to the first q-1 vertices is exactly the
    // sweep on the subideal, and minimality carries over
    std::vector<int> head(static_cast<std::size_t>(q - 1));
    std::iota(head.begin(), head.end(), 0);
    auto sub = ideal.subsequence(head);
    auto sub_complex = CellComplex::taylor(sub);
    auto sub_m = prune(sub_complex);
    std::vector<MatchPair> restricted;
    for (const auto& p : m.pairs)
      if (!(p.upper() & (Cell{1} << (q - 1)))) restricted.push_back(p);
    CHECK(restricted == sub_m.pairs);
    if (is_minimal(morse_complex(complex, m), 0))
      CHECK(is_minimal(morse_complex(sub_complex, sub_m), 0));
  }
  CHECK(checked >= 20);
}

TEST_CASE("artinian closure does not change pruned minimality") {
  std::mt19937_64 rng(1617);
  for (int trial = 0; trial < 15; ++trial) {
    auto ideal = random_ideal(rng, 3, 3, 2);
    if (ideal.is_zero() || ideal.is_unit()) continue;
    std::vector<std::int64_t> a;
    for (int i = 1; i <= ideal.ambient(); ++i) {
      std::int64_t top = 0;
      for (const auto& g : ideal.generators()) top = std::max(top, g.exponent(i));
      a.push_back(top + 1);
    }
    auto artin = artinian_add(ideal, a);
    CHECK((pruned_table(ideal) == betti_numbers(ideal)) ==
          (pruned_table(artin) == betti_numbers(artin)));
  }
}
