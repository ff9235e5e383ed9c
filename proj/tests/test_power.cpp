#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pruned/power.hpp"

using namespace pruned;
using namespace pruned::testing;

namespace {

std::vector<std::int64_t> sigma(std::initializer_list<std::int64_t> v) { return v; }

BettiTable unpruned_quotient(const PowerComplex& pc) {
  BettiTable t;
  for (Cell c : pc.complex.cells())
    if (c != 0) t.add(cell_size(c) - 1, pc.complex.grade(c));
  return quotient_table(t, pc.complex.vertex_monomials().ambient());
}

}  // namespace

TEST_CASE("power vertices in both orders") {
  auto lex = power_vertices(3, 2, PowerVertexOrder::lex);
  REQUIRE(lex.size() == 6);
  CHECK(lex[0] == sigma({2, 0, 0}));
  CHECK(lex[1] == sigma({1, 1, 0}));
  CHECK(lex[2] == sigma({1, 0, 1}));
  CHECK(lex[3] == sigma({0, 2, 0}));
  CHECK(lex[4] == sigma({0, 1, 1}));
  CHECK(lex[5] == sigma({0, 0, 2}));
  auto corners = power_vertices(3, 2, PowerVertexOrder::corners_first);
  CHECK(corners[0] == sigma({2, 0, 0}));
  CHECK(corners[1] == sigma({0, 2, 0}));
  CHECK(corners[2] == sigma({0, 0, 2}));
  CHECK(corners[3] == sigma({1, 1, 0}));
  CHECK(power_vertices(2, 3, PowerVertexOrder::lex).size() == 4);
}

TEST_CASE("facet counts of the small complexes") {
  // q = 3, r = 2: the base simplex plus one triangle per corner
  auto f32 = lrq_facets(3, 2, PowerVertexOrder::lex);
  CHECK(f32.size() == 4);
  for (const auto& f : f32) CHECK(f.size() == 3);
  // q = r = 2: two segments
  auto f22 = lrq_facets(2, 2, PowerVertexOrder::lex);
  CHECK(f22.size() == 2);
  for (const auto& f : f22) CHECK(f.size() == 2);
  // r = 1: the full simplex on q vertices
  auto f1 = lrq_facets(4, 1, PowerVertexOrder::lex);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].size() == 4);
}

TEST_CASE("the square of the triangle ideal") {
  auto tri = parse_ideal("x1*x2, x1*x3, x2*x3");
  auto pc = lrq_complex(tri, 2);
  CHECK(pc.vertices.size() == 6);
  CHECK(pc.generators_minimal);
  CHECK(totals(unpruned_quotient(pc)) == std::vector<std::size_t>({1, 6, 9, 4}));

  auto result = prune_power(tri, 2);
  CHECK(totals(result.table) == std::vector<std::size_t>({1, 6, 6, 1}));
  CHECK(result.table == quotient_table(betti_numbers(power(tri, 2)), 3));
  // same outcome under the corner-first vertex order
  auto corners = prune_power(tri, 2, PowerVertexOrder::corners_first);
  CHECK(totals(corners.table) == std::vector<std::size_t>({1, 6, 6, 1}));
}

TEST_CASE("r = 1 reduces to taylor pruning") {
  for (const char* text : {"x1*x2, x1*x3, x2*x3", "x1*x2, x2*x3, x3*x4"}) {
    auto ideal = parse_ideal(text);
    auto pc = lrq_complex(ideal, 1);
    CHECK(pc.complex.cell_count() ==
          (std::size_t{1} << ideal.num_generators()));  // the whole simplex
    CHECK(pc.complex.vertex_monomials() == ideal);
    auto result = prune_power(ideal, 1);
    CHECK(result.table == quotient_table(pruned_table(ideal), ideal.ambient()));
  }
}

TEST_CASE("principal ideals resolve instantly at every power") {
  auto ideal = parse_ideal("x1*x2*x3");
  for (std::int64_t r : {1, 2, 5}) {
    auto result = prune_power(ideal, r);
    CHECK(totals(result.table) == std::vector<std::size_t>({1, 1}));
  }
}

TEST_CASE("vertex labels generate the power minimally for squarefree input") {
  std::mt19937_64 rng(808);
  for (int q = 2; q <= 3; ++q)
    for (std::int64_t r = 1; r <= 3; ++r)
      for (int trial = 0; trial < 6; ++trial) {
        auto ideal = random_squarefree(rng, 3 + trial % 3, q);
        if (ideal.num_generators() != q || ideal.is_unit()) continue;
        auto pc = lrq_complex(ideal, r);
        // labels m^sigma list I^r with multiplicity one each
        auto pow = power(ideal, r);
        for (const auto& g : pow.generators()) {
          int count = 0;
          for (int j = 0; j < pc.complex.vertex_count(); ++j)
            if (pc.complex.vertex_monomial(j) == g) ++count;
          CHECK(count >= 1);
        }
        CHECK(pc.generators_minimal == (static_cast<int>(pc.vertices.size()) ==
                                        pow.num_generators()));
      }
}

TEST_CASE("pruned power tables dominate the oracle of the power") {
  std::mt19937_64 rng(809);
  for (int trial = 0; trial < 12; ++trial) {
    auto ideal = random_squarefree(rng, 4, 3);
    if (ideal.num_generators() < 2 || ideal.is_unit()) continue;
    auto result = prune_power(ideal, 2);
    auto oracle = quotient_table(betti_numbers(power(ideal, 2)), ideal.ambient());
    CHECK(dominates(result.table, oracle));
    auto report = verify_matching(result.complex.complex, result.matching);
    CHECK(report.ok());
  }
}

TEST_CASE("face capacity cap") {
  Caps caps;
  caps.faces = 4;
  CHECK_THROWS_AS(lrq_complex(parse_ideal("x1*x2, x1*x3, x2*x3"), 2, PowerVertexOrder::lex, caps),
                  CapacityError);
}

TEST_CASE("power preconditions") {
  CHECK_THROWS_AS(lrq_complex(parse_ideal("x1^2, x2"), 2), InvalidInputError);  // not squarefree
  CHECK_THROWS_AS(lrq_complex(parse_ideal("x1*x2, x1*x3, x2*x3"), 0), InvalidInputError);
}
