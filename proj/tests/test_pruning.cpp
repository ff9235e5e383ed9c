#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pruned/betti.hpp"
#include "pruned/pruning.hpp"

using namespace pruned;
using namespace pruned::testing;

TEST_CASE("triangle edge ideal prunes to the minimal resolution") {
  auto complex = CellComplex::taylor(parse_ideal("x1*x2, x1*x3, x2*x3"));
  auto m = prune(complex);
  REQUIRE(m.pairs.size() == 1);
  CHECK(m.pairs[0].lower == 0b110);
  CHECK(m.pairs[0].dir == 0);
  CHECK(m.pairs[0].upper() == 0b111);
  CHECK(verify_matching(complex, m).ok());

  auto crit = critical_cells(complex, m);
  REQUIRE(crit.size() == 3);
  CHECK(crit.at(0).size() == 1);
  CHECK(crit.at(1).size() == 3);
  CHECK(crit.at(2).size() == 2);
  std::vector<Cell> deg2;
  for (const auto& gc : crit.at(2)) deg2.push_back(gc.cell);
  CHECK(deg2 == std::vector<Cell>({0b011, 0b101}));
}

TEST_CASE("regular sequences admit no homogeneous edge") {
  auto complex = CellComplex::taylor(parse_ideal("x1, x2"));
  CHECK(prune(complex).pairs.empty());
}

TEST_CASE("prune_partial respects the predicate") {
  auto complex = CellComplex::taylor(parse_ideal("x1*x2, x1*x3, x2*x3"));
  auto none = prune_partial(complex, [](Cell, int) { return false; });
  CHECK(none.pairs.empty());
  auto all = prune_partial(complex, [](Cell, int) { return true; });
  CHECK(all.pairs == prune(complex).pairs);
}

TEST_CASE("prune_partial honours a pre-seeded matching") {
  auto complex = CellComplex::taylor(parse_ideal("x1*x2, x1*x3, x2*x3"));
  Matching pre;
  pre.pairs.push_back({0b110, 0});  // the edge the sweep would find
  auto m = prune_partial(complex, [](Cell, int) { return true; }, {}, pre);
  CHECK(m.pairs == pre.pairs);
  CHECK(verify_matching(complex, m).ok());
}

TEST_CASE("custom direction order still verifies") {
  auto ideal = parse_ideal("x1*x2, x2*x3, x3*x4, x1*x4, x1*x3");
  auto complex = CellComplex::taylor(ideal);
  auto m = prune_partial(complex, [](Cell, int) { return true; }, {4, 3, 2, 1, 0});
  CHECK(verify_matching(complex, m).ok());
  CHECK(euler_preserved(complex, critical_cells(complex, m)));
}

TEST_CASE("hand-built matchings are rejected for the right reason") {
  auto complex = CellComplex::taylor(parse_ideal("x1*x2, x1*x3, x2*x3"));
  Matching twice;  // cell 0b110 used by two pairs
  twice.pairs.push_back({0b110, 0});
  twice.pairs.push_back({0b010, 2});
  auto r1 = verify_matching(complex, twice);
  CHECK_FALSE(r1.ok());
  CHECK_FALSE(r1.matching_property);

  Matching inhom;  // gr({1}) = x1*x2 != gr({1,2}) = x1*x2*x3
  inhom.pairs.push_back({0b001, 1});
  auto r2 = verify_matching(complex, inhom);
  CHECK_FALSE(r2.ok());
  CHECK(r2.matching_property);
  CHECK_FALSE(r2.homogeneous);

  auto sub = CellComplex::subcomplex(parse_ideal("x1*x2, x1*x3, x2*x3"),
                                     {0, 0b001, 0b010, 0b100, 0b011, 0b110});
  Matching outside;  // {1,3} is not a face of the subcomplex
  outside.pairs.push_back({0b101, 1});
  CHECK_FALSE(verify_matching(sub, outside).cells_in_complex);
}

TEST_CASE("cyclic matchings are caught with a witness") {
  // identically-labelled vertices: every edge is homogeneous, so these three
  // pairs form a directed flow cycle {1,2} -> {2,3} -> {1,3} -> {1,2}
  auto ideal = parse_ideal("x1*x2*x3, x1*x2*x3, x1*x2*x3");
  auto complex = CellComplex::taylor(ideal);
  Matching bad;
  bad.pairs.push_back({0b001, 1});
  bad.pairs.push_back({0b010, 2});
  bad.pairs.push_back({0b100, 0});
  auto r = verify_matching(complex, bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.acyclic);
  CHECK_FALSE(r.witness_cycle.empty());
}

TEST_CASE("matching json round-trip") {
  Matching m;
  m.pairs.push_back({0b110, 0});
  m.pairs.push_back({0b0101, 3});
  auto back = Matching::from_json(m.to_json());
  CHECK(back.pairs == m.pairs);
  CHECK(m.to_json().find("\"cell\"") != std::string::npos);
  CHECK(m.to_json().find("\"dir\"") != std::string::npos);
  CHECK_THROWS_AS(Matching::from_json("[{\"cell\": 3}]"), InvalidInputError);
}

TEST_CASE("random ideals: sweep output always verifies") {
  std::mt19937_64 rng(20240817);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    MonomialIdeal ideal = (trial % 2 == 0) ? random_squarefree(rng, 2 + trial % 7, 2 + trial % 6)
                                           : random_ideal(rng, 2 + trial % 5, 2 + trial % 6, 3);
    if (ideal.is_zero() || ideal.is_unit()) continue;
    ideal = minimalize(ideal);
    auto complex = CellComplex::taylor(ideal);
    auto m = prune(complex);
    auto report = verify_matching(complex, m);
    CHECK(report.ok());
    if (!report.ok()) { INFO(print_ideal(ideal)); FAIL("matching rejected"); }
    CHECK(euler_preserved(complex, critical_cells(complex, m)));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("pruned ranks dominate the betti numbers") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto ideal = random_squarefree(rng, 3 + trial % 5, 2 + trial % 5);
    if (ideal.is_zero() || ideal.is_unit()) continue;
    auto upper = pruned_table(ideal);
    auto lower = betti_numbers(ideal);
    CHECK(dominates(upper, lower));
  }
}
