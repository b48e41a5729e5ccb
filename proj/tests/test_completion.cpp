#include <catch2/catch_amalgamated.hpp>

#include "alto/completion.hpp"
#include "alto/oracle.hpp"
#include "testutil.hpp"

using namespace alto;

TEST_CASE("arc_signs records sign and balancedness per arc", "[completion]") {
  Pog h = make_pog(4, {{1, 2}}, {{0, 1}, {3, 2}});
  auto signs = arc_signs(h, {{0, 1, 2, 3}});
  REQUIRE(signs.size() == 2);
  CHECK(signs[0].arc == VertexPair{0, 1});
  CHECK(signs[0].positive);
  CHECK_FALSE(signs[0].balanced);
  CHECK(signs[1].arc == VertexPair{3, 2});
  CHECK_FALSE(signs[1].positive);
  CHECK_FALSE(signs[1].balanced);

  Pog k2 = make_pog(2, {}, {{1, 0}});
  auto s2 = arc_signs(k2, {{0, 1}});
  REQUIRE(s2.size() == 1);
  CHECK_FALSE(s2[0].positive);
  CHECK(s2[0].balanced);

  CHECK(arc_signs(make_pog(3, {{0, 1}, {1, 2}}, {}), {{0, 1, 2}}).empty());
  CHECK_THROWS_AS(arc_signs(h, {{0, 2, 1, 3}}), std::invalid_argument);
}

TEST_CASE("complete on the four example shapes", "[completion]") {
  SECTION("oriented path completes along itself") {
    auto cert = complete(make_pog(3, {{1, 2}}, {{0, 1}}));
    auto* done = std::get_if<Completed>(&cert);
    REQUIRE(done);
    CHECK(done->orientation == make_pog(3, {}, {{0, 1}, {1, 2}}));
  }
  SECTION("inward-oriented path ends refute by opposing signs") {
    auto cert = complete(make_pog(4, {{1, 2}}, {{0, 1}, {3, 2}}));
    auto* opp = std::get_if<OpposingUnbalancedArcs>(&cert);
    REQUIRE(opp);
    CHECK(verify_certificate(make_pog(4, {{1, 2}}, {{0, 1}, {3, 2}}), cert));
  }
  SECTION("claw refutes by recognition") {
    Pog claw = make_pog(4, {{0, 1}, {0, 2}, {0, 3}}, {});
    auto cert = complete(claw);
    auto* npi = std::get_if<NotProperInterval>(&cert);
    REQUIRE(npi);
    CHECK(npi->witness.kind == WegnerWitness::Kind::Claw);
    CHECK(verify_certificate(claw, cert));
  }
  SECTION("directed triangle refutes by its cycle") {
    Pog tri = make_pog(3, {}, {{0, 1}, {1, 2}, {2, 0}});
    auto cert = complete(tri);
    auto* dc = std::get_if<DirectedCycle>(&cert);
    REQUIRE(dc);
    std::vector<VertexId> sorted = dc->cycle;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<VertexId>{0, 1, 2});
    CHECK(verify_certificate(tri, cert));
  }
}

TEST_CASE("components are reconciled independently", "[completion]") {
  // one positive and one negative unbalanced arc in different components
  Pog h = make_pog(6, {{1, 2}, {3, 4}}, {{0, 1}, {5, 4}});
  auto cert = complete(h);
  auto* done = std::get_if<Completed>(&cert);
  REQUIRE(done);
  CHECK(verify_completion(h, done->orientation));

  // same signs inside one component refute
  Pog bad = make_pog(4, {{1, 2}}, {{0, 1}, {3, 2}});
  CHECK_FALSE(can_complete(bad));
}

TEST_CASE("negative balanced arcs are absorbed by twin reordering", "[completion]") {
  // 0 and 2 are twins in K4 minus the edge {1,3}; the arc (2,0) is balanced
  Pog h = make_pog(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}, {{2, 0}});
  auto cert = complete(h);
  auto* done = std::get_if<Completed>(&cert);
  REQUIRE(done);
  CHECK(verify_completion(h, done->orientation));
  CHECK(done->orientation.has_arc(2, 0));
}

TEST_CASE("verify_completion rejects wrong completions", "[completion]") {
  Pog h = make_pog(3, {{1, 2}}, {{0, 1}});
  Pog good = make_pog(3, {}, {{0, 1}, {1, 2}});
  CHECK(verify_completion(h, good));
  // missing the input arc
  CHECK_FALSE(verify_completion(h, make_pog(3, {}, {{1, 0}, {1, 2}})));
  // an edge left unoriented
  CHECK_FALSE(verify_completion(h, h));
  // different underlying graph
  CHECK_FALSE(verify_completion(h, make_pog(3, {}, {{0, 1}, {1, 2}, {0, 2}})));
  // wrong vertex count
  CHECK_FALSE(verify_completion(h, make_pog(2, {}, {{0, 1}})));
  // cyclic orientation
  Pog tri_in = make_pog(3, {{1, 2}, {0, 2}}, {{0, 1}});
  CHECK_FALSE(verify_completion(tri_in, make_pog(3, {}, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("can_complete matches the oracle on every small instance", "[completion]") {
  for (const Pog& h : enumerate_pogs(4)) {
    INFO("pog code " << canonical_code(h));
    REQUIRE(can_complete(h) == oracle_alt_completable(h));
  }
}

TEST_CASE("completions and certificates verify on random instances", "[completion]") {
  std::mt19937_64 rng(29);
  int completed = 0, refuted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Pog h = trial % 2 ? testutil::random_planted_completable(rng, 7)
                      : testutil::random_pog(rng, 7);
    auto cert = complete(h);
    REQUIRE(verify_certificate(h, cert));
    if (std::holds_alternative<Completed>(cert))
      ++completed;
    else
      ++refuted;
  }
  CHECK(completed > 100);
  CHECK(refuted > 100);
}

TEST_CASE("opposing-sign presence is stable under enumeration reversal", "[completion]") {
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Pog h = testutil::random_planted_completable(rng, 7);
    // flip one arc to stir in refutations
    if (!h.arcs().empty() && trial % 3 == 0) {
      auto arcs = h.arcs();
      arcs[0] = {arcs[0].second, arcs[0].first};
      h = Pog(h.vertex_count(), h.edges(), arcs);
    }
    Graph g = underlying(h);
    auto se = straight_enumeration(g);
    if (!se || !detail::find_directed_cycle(h).empty()) continue;
    StraightEnumeration rev{{se->order.rbegin(), se->order.rend()}};

    auto comps = components(g);
    auto opposing_by = [&](const StraightEnumeration& order) {
      auto signs = arc_signs(h, order);
      std::vector<int> comp_of(h.vertex_count());
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
      std::vector<char> pos_unb(comps.size(), 0), neg_unb(comps.size(), 0);
      for (const auto& s : signs) {
        if (s.balanced) continue;
        (s.positive ? pos_unb : neg_unb)[comp_of[s.arc.first]] = 1;
      }
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (pos_unb[c] && neg_unb[c]) return true;
      return false;
    };
    REQUIRE(opposing_by(*se) == opposing_by(rev));
    ++tested;
  }
  CHECK(tested > 300);
}
