#include <catch2/catch_amalgamated.hpp>

#include "alto/interval.hpp"
#include "alto/oracle.hpp"
#include "testutil.hpp"

using namespace alto;

TEST_CASE("umbrella_holds checks neighbourhood contiguity", "[interval]") {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(umbrella_holds(path, {{0, 1, 2, 3}}));
  CHECK(umbrella_holds(path, {{3, 2, 1, 0}}));
  CHECK_FALSE(umbrella_holds(path, {{0, 2, 1, 3}}));

  Graph edgeless(3, {});
  CHECK(umbrella_holds(edgeless, {{2, 0, 1}}));

  CHECK_THROWS_AS(umbrella_holds(path, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(umbrella_holds(path, {{0, 1, 2, 2}}), std::invalid_argument);
}

TEST_CASE("straight_enumeration on basic graphs", "[interval]") {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  auto se = straight_enumeration(path);
  REQUIRE(se);
  CHECK(se->order == std::vector<VertexId>{0, 1, 2, 3});

  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  auto se3 = straight_enumeration(k3);
  REQUIRE(se3);
  CHECK(se3->order == std::vector<VertexId>{0, 1, 2});

  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(straight_enumeration(claw));
}

TEST_CASE("straight_enumeration lays out components consecutively", "[interval]") {
  // two paths interleaved by index: {0,2,4} and {1,3}
  Graph g(5, {{0, 2}, {2, 4}, {1, 3}});
  auto se = straight_enumeration(g);
  REQUIRE(se);
  CHECK(umbrella_holds(g, *se));
  std::vector<int> comp_of{0, 1, 0, 1, 0};
  std::size_t i = 0;
  int blocks = 0;
  while (i < se->order.size()) {
    std::size_t j = i;
    while (j < se->order.size() && comp_of[se->order[j]] == comp_of[se->order[i]]) ++j;
    ++blocks;
    i = j;
  }
  CHECK(blocks == 2);
  CHECK(comp_of[se->order[0]] == 0); // component with the smallest vertex first
}

TEST_CASE("reversal of a straight enumeration is straight", "[interval]") {
  for (const Graph& g : enumerate_graphs(6)) {
    auto se = straight_enumeration(g);
    if (!se) continue;
    REQUIRE(umbrella_holds(g, *se));
    StraightEnumeration rev{{se->order.rbegin(), se->order.rend()}};
    REQUIRE(umbrella_holds(g, rev));
  }
}

TEST_CASE("wegner_witness produces verifiable witnesses", "[interval]") {
  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  auto w = wegner_witness(claw);
  CHECK(w.kind == WegnerWitness::Kind::Claw);
  CHECK(w.vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(verify_wegner_witness(claw, w));

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto wc = wegner_witness(c5);
  CHECK(wc.kind == WegnerWitness::Kind::Cycle);
  CHECK(wc.vertices.size() == 5);
  CHECK(verify_wegner_witness(c5, wc));

  // net plus one isolated vertex
  Graph net7(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
  auto wn = wegner_witness(net7);
  CHECK(wn.kind == WegnerWitness::Kind::Net);
  CHECK(wn.vertices == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  CHECK(verify_wegner_witness(net7, wn));

  Graph tent(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
  auto wt = wegner_witness(tent);
  CHECK(wt.kind == WegnerWitness::Kind::Tent);
  CHECK(verify_wegner_witness(tent, wt));

  Graph path(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(wegner_witness(path), std::invalid_argument);
}

TEST_CASE("bad witnesses are rejected", "[interval]") {
  Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(verify_wegner_witness(claw, {WegnerWitness::Kind::Net, {0, 1, 2, 3}}));
  CHECK_FALSE(verify_wegner_witness(claw, {WegnerWitness::Kind::Claw, {0, 1, 2}}));
  CHECK_FALSE(verify_wegner_witness(claw, {WegnerWitness::Kind::Claw, {0, 1, 2, 7}}));
  CHECK_FALSE(verify_wegner_witness(claw, {WegnerWitness::Kind::Cycle, {0, 1, 2, 3}}));
}

TEST_CASE("recognition matches forbidden-subgraph search exhaustively", "[interval]") {
  // every graph on up to 6 vertices, one per isomorphism class (the
  // acceptance suite pushes this to 7)
  for (const Graph& g : enumerate_graphs(6)) {
    bool straight = straight_enumeration(g).has_value();
    bool obstacle = testutil::has_wegner_obstacle(g);
    INFO("graph code " << canonical_code(g));
    REQUIRE(straight == !obstacle);
    if (obstacle) REQUIRE(verify_wegner_witness(g, wegner_witness(g)));
  }
}

TEST_CASE("straight_enumeration is deterministic", "[interval]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testutil::random_proper_interval_graph(rng, 9);
    auto a = straight_enumeration(g);
    auto b = straight_enumeration(g);
    REQUIRE(a);
    CHECK(a->order == b->order);
  }
}
