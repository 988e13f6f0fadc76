#include <doctest.h>

#include "oracles.hpp"
#include "tropmat/comparability.hpp"
#include "tropmat/error.hpp"

using namespace tropmat;

namespace {

NdType t(const char* text, int d) { return NdType::parse(text, d); }

/// Independent check: does ANY ordered partition refine b into a?
bool oracle_is_refinement(const NdType& a, const NdType& b) {
  for (const auto& parts : oracles::ordered_partitions(a.d())) {
    if (refine(b, OrderedPartition(a.d(), parts)) == a) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("comparability graph construction") {
  SUBCASE("equal types give undirected edges only") {
    MixedMultigraph g = comparability_graph(t("(12,13)", 3), t("(12,13)", 3));
    CHECK(g.directed.empty());
    CHECK(g.has_undirected(0, 1));
    CHECK(g.has_undirected(0, 2));
    // Both ordered pairs of each position contribute.
    CHECK(g.undirected_multiplicity(0, 1) == 2);
  }

  SUBCASE("tope against hexagon gives a directed triangle") {
    MixedMultigraph g = comparability_graph(t("(12,23,13)", 3), t("(1,2,3)", 3));
    CHECK(g.undirected.empty());
    CHECK(g.has_directed(1, 0));  // 2 -> 1
    CHECK(g.has_directed(2, 1));  // 3 -> 2
    CHECK(g.has_directed(0, 2));  // 1 -> 3
    CHECK(g.directed.size() == 3);
  }

  SUBCASE("the (5,6) pair splits into the expected undirected classes") {
    MixedMultigraph g = comparability_graph(t("(123,1,3,4,56)", 6),
                                            t("(123,16,34,456,56)", 6));
    CHECK(g.has_undirected(0, 1));
    CHECK(g.has_undirected(0, 2));
    CHECK(g.has_undirected(1, 2));
    CHECK(g.has_undirected(4, 5));
    CHECK(g.undirected.size() == 4);
    CHECK(g.has_directed(0, 5));  // 1 -> 6
    CHECK(g.has_directed(2, 3));  // 3 -> 4
    CHECK(g.has_directed(3, 4));  // 4 -> 5
    CHECK(g.has_directed(3, 5));  // 4 -> 6
    CHECK(g.directed.size() == 4);
  }

  CHECK_THROWS_AS(comparability_graph(t("(1)", 2), t("(1,1)", 2)),
                  TropmatError);
}

TEST_CASE("cycle detection") {
  SUBCASE("equal types are acyclic") {
    CHECK(is_acyclic(comparability_graph(t("(12,3)", 3), t("(12,3)", 3)))
              .acyclic);
  }

  SUBCASE("directed triangle is cyclic with a replayable witness") {
    MixedMultigraph g = comparability_graph(t("(12,23,13)", 3), t("(1,2,3)", 3));
    AcyclicityResult r = is_acyclic(g);
    REQUIRE_FALSE(r.acyclic);
    REQUIRE(r.cycle.has_value());
    CHECK(witness_replays(g, *r.cycle));
    CHECK(r.cycle->steps.size() == 3);
  }

  SUBCASE("mixed cycle through an undirected edge") {
    MixedMultigraph g = comparability_graph(t("(12,12)", 2), t("(12,1)", 2));
    AcyclicityResult r = is_acyclic(g);
    REQUIRE_FALSE(r.acyclic);
    REQUIRE(r.cycle.has_value());
    CHECK(witness_replays(g, *r.cycle));
    bool has_directed = false;
    bool has_undirected = false;
    for (const CycleStep& s : r.cycle->steps) {
      (s.directed ? has_directed : has_undirected) = true;
    }
    CHECK(has_directed);
    CHECK(has_undirected);
  }

  SUBCASE("reversal symmetry, exhaustive at (2,3)") {
    auto types = oracles::all_types(2, 3);
    for (const NdType& a : types) {
      for (const NdType& b : types) {
        CHECK(is_acyclic(comparability_graph(a, b)).acyclic ==
              is_acyclic(comparability_graph(b, a)).acyclic);
      }
    }
  }
}

TEST_CASE("refinement witness") {
  SUBCASE("the (5,6) pair yields the unique layered partition") {
    NdType a = t("(123,1,3,4,56)", 6);
    NdType b = t("(123,16,34,456,56)", 6);
    RefinementWitness w = refinement_witness(a, b);
    REQUIRE(w.found());
    CHECK(w.partition->to_string() == "123,4,56");
    CHECK(refine(b, *w.partition) == a);
  }

  SUBCASE("identical types always succeed") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      RefinementWitness w = refinement_witness(a, a);
      REQUIRE(w.found());
      CHECK(refine(a, *w.partition) == a);
    }
    // With every letter co-occurring, the witness collapses to ([d]).
    RefinementWitness w = refinement_witness(t("(12,12)", 2), t("(12,12)", 2));
    CHECK(w.partition->to_string() == "12");
  }

  SUBCASE("tope inside the square is obstructed by a 2-cycle") {
    RefinementWitness w = refinement_witness(t("(1,2)", 2), t("(12,12)", 2));
    CHECK_FALSE(w.found());
    REQUIRE(w.cycle.has_value());
    CHECK(witness_replays(comparability_graph(t("(1,2)", 2), t("(12,12)", 2)),
                          *w.cycle));
  }

  CHECK_THROWS_WITH_AS(refinement_witness(t("(2,2)", 2), t("(12,1)", 2)),
                       doctest::Contains("NotSubset"), TropmatError);

  SUBCASE("letters missing from B land in a trailing part") {
    RefinementWitness w = refinement_witness(t("(1,2)", 3), t("(12,2)", 3));
    REQUIRE(w.found());
    CHECK(w.partition->parts().back() == 0b100u);
    CHECK(refine(t("(12,2)", 3), *w.partition) == t("(1,2)", 3));
  }
}

TEST_CASE("witness, acyclicity and brute force agree") {
  auto three_way = [](int n, int d) {
    auto types = oracles::all_types(n, d);
    for (const NdType& b : types) {
      for (const NdType& a : types) {
        if (!leq(a, b)) continue;
        const bool by_oracle = oracle_is_refinement(a, b);
        const bool by_graph = is_acyclic(comparability_graph(a, b)).acyclic;
        RefinementWitness w = refinement_witness(a, b);
        CHECK(by_oracle == by_graph);
        CHECK(by_oracle == w.found());
        if (w.found()) CHECK(refine(b, *w.partition) == a);
      }
    }
  };
  three_way(2, 3);
  three_way(2, 4);
  three_way(3, 3);
}

TEST_CASE("dot export lists each edge") {
  MixedMultigraph g = comparability_graph(t("(12,12)", 2), t("(12,1)", 2));
  std::string dot = g.to_dot();
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("2 -> 1") != std::string::npos);
}
