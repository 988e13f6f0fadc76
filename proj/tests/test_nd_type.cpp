#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tropmat/error.hpp"
#include "tropmat/nd_type.hpp"

using namespace tropmat;

namespace {

NdType t(const char* text, int d) { return NdType::parse(text, d); }

OrderedPartition p(int d, std::initializer_list<Mask> parts) {
  return OrderedPartition(d, parts);
}

}  // namespace

TEST_CASE("construction validates entries") {
  CHECK_NOTHROW(NdType::make(5, 6, {{1, 2, 3}, {1}, {3}, {4}, {5, 6}}));
  CHECK_NOTHROW(NdType::make(1, 1, {{1}}));

  CHECK_THROWS_WITH_AS(NdType::make(2, 3, {{1, 2}, {}}),
                       doctest::Contains("EmptyEntry"), TropmatError);
  CHECK_THROWS_WITH_AS(NdType::make(2, 3, {{1}, {4}}),
                       doctest::Contains("OutOfRange"), TropmatError);
  CHECK_THROWS_WITH_AS(NdType::make(3, 3, {{1}, {2}}),
                       doctest::Contains("LengthMismatch"), TropmatError);
}

TEST_CASE("text round trip") {
  const char* samples[] = {"(123,1,3,4,56)", "(1)", "(12,12)", "(2,1)"};
  for (const char* s : samples) {
    int d = s[1] == '1' && s[2] == '2' && s[3] == '3' ? 6 : 2;
    NdType a = t(s, d);
    CHECK(a.to_string() == s);
    CHECK(NdType::parse(a.to_string(), d) == a);
  }

  SUBCASE("wide alphabets use dots") {
    NdType a = NdType::make(2, 12, {{1, 12, 4}, {7}});
    CHECK(a.to_string() == "(1.4.12,7)");
    CHECK(NdType::parse("(1.4.12,7)", 12) == a);
    CHECK(NdType::parse("1.4.12,7", 12) == a);
  }

  SUBCASE("parens are optional on input") {
    CHECK(t("12,1", 2) == t("(12,1)", 2));
  }

  CHECK_THROWS_AS(NdType::parse("(12,,1)", 2), TropmatError);
  CHECK_THROWS_AS(NdType::parse("", 2), TropmatError);
  CHECK_THROWS_AS(NdType::parse("(13)", 2), TropmatError);
}

TEST_CASE("refine follows the earliest part with nonempty overlap") {
  // The running (5,6) example: restricting B by P recovers A.
  NdType b = t("(123,16,34,456,56)", 6);
  OrderedPartition fig2 = p(6, {0b000111, 0b001000, 0b110000});
  CHECK(refine(b, fig2) == t("(123,1,3,4,56)", 6));

  SUBCASE("single-part partition is the identity") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      CHECK(refine(a, p(3, {0b111})) == a);
    }
  }

  SUBCASE("frozen small case, cross-checked by full enumeration") {
    NdType a = t("(12,12)", 2);
    CHECK(refine(a, p(2, {0b10, 0b01})) == t("(2,2)", 2));
    std::vector<NdType> results;
    for (const auto& parts : oracles::ordered_partitions(2)) {
      results.push_back(refine(a, OrderedPartition(2, parts)));
    }
    CHECK(sorted_unique(results) ==
          std::vector<NdType>{t("(1,1)", 2), t("(12,12)", 2), t("(2,2)", 2)});
  }
}

TEST_CASE("refinement is a componentwise subset and idempotent") {
  for (int d = 1; d <= 4; ++d) {
    auto partitions = oracles::ordered_partitions(d);
    for (int n = 1; n <= 2; ++n) {
      for (const NdType& a : oracles::all_types(n, d)) {
        for (const auto& parts : partitions) {
          OrderedPartition part(d, parts);
          NdType r = refine(a, part);
          CHECK(leq(r, a));
          CHECK(refine(r, part) == r);
        }
      }
    }
  }
}

TEST_CASE("total refinements") {
  CHECK(total_refinements(t("(1,2)", 2)) ==
        std::vector<NdType>{t("(1,2)", 2)});
  CHECK(total_refinements(t("(12,12)", 2)) ==
        std::vector<NdType>{t("(1,1)", 2), t("(2,2)", 2)});

  SUBCASE("hexagon cell has six vertices, not including (1,2,3)") {
    std::vector<NdType> expected = {t("(1,2,1)", 3), t("(1,3,1)", 3),
                                    t("(1,3,3)", 3), t("(2,2,1)", 3),
                                    t("(2,2,3)", 3), t("(2,3,3)", 3)};
    CHECK(total_refinements(t("(12,23,13)", 3)) == expected);
  }

  SUBCASE("agrees with the full ordered-partition enumeration") {
    for (int d = 2; d <= 4; ++d) {
      auto partitions = oracles::ordered_partitions(d);
      for (const NdType& a : oracles::all_types(2, d)) {
        std::vector<NdType> via_all;
        for (const auto& parts : partitions) {
          NdType r = refine(a, OrderedPartition(d, parts));
          if (r.is_total()) via_all.push_back(r);
        }
        CHECK(total_refinements(a) == sorted_unique(via_all));
      }
    }
  }

  SUBCASE("never empty") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      CHECK(total_refinements(a).size() >= 1);
    }
  }

  CHECK_THROWS_WITH_AS(
      total_refinements(NdType::constant(1, 9, 0)),
      doctest::Contains("LimitExceeded"), TropmatError);
}

TEST_CASE("dimensions") {
  CHECK(arrangement_dim(NdType::constant(3, 4, 1)) == 3);
  CHECK(arrangement_dim(t("(123,1,3,4,56)", 6)) == 2);
  CHECK(arrangement_dim(t("(123,16,34,456,56)", 6)) == 0);

  CHECK(minkowski_dim(t("(1,2,3)", 3)) == 0);
  CHECK(minkowski_dim(t("(12,23,13)", 3)) == 2);
  CHECK(minkowski_dim(t("(12,12)", 2)) == 1);

  SUBCASE("complement to d-1, exhaustive then random-free") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      CHECK(arrangement_dim(a) + minkowski_dim(a) == 2);
    }
    for (const NdType& a : oracles::all_types(2, 4)) {
      CHECK(arrangement_dim(a) + minkowski_dim(a) == 3);
    }
  }

  SUBCASE("zero Minkowski dimension means all singletons") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      CHECK((minkowski_dim(a) == 0) == a.is_total());
    }
  }

  SUBCASE("Minkowski dimension equals the affine rank of the vertices") {
    for (const NdType& a : oracles::all_types(2, 3)) {
      CHECK(minkowski_dim(a) == oracles::affine_rank(cell_vertex_points(a)));
    }
    for (const NdType& a : oracles::all_types(3, 3)) {
      CHECK(minkowski_dim(a) == oracles::affine_rank(cell_vertex_points(a)));
    }
  }
}

TEST_CASE("boundedness is the full letter union") {
  CHECK(is_bounded(t("(12,12)", 2)));
  CHECK_FALSE(is_bounded(t("(1,1)", 2)));
  // All six letters occur in this one, so it is bounded.
  CHECK(is_bounded(t("(123,1,3,4,56)", 6)));
}

TEST_CASE("meet, join, componentwise order") {
  NdType a = t("(12,12)", 2);
  CHECK(meet(a, t("(12,1)", 2)).type == t("(12,1)", 2));

  MeetResult disjoint = meet(t("(1,1)", 2), t("(2,2)", 2));
  CHECK_FALSE(disjoint.ok());
  CHECK(disjoint.empty_positions == std::vector<int>{0, 1});

  CHECK(join(t("(1,1)", 2), t("(2,2)", 2)) == a);
  CHECK(leq(t("(12,1)", 2), a));
  CHECK_FALSE(leq(a, t("(12,1)", 2)));
}

TEST_CASE("type graph bookkeeping") {
  TypeGraph g = type_graph(t("(123,1,3,4,56)", 6));
  CHECK(g.edges.size() == 8);  // sum of entry sizes
  CHECK(g.components == 3);
  CHECK(g.used_components == 3);
  CHECK(g.forest);

  CHECK_FALSE(type_graph(t("(12,12)", 2)).forest);
  CHECK(type_graph(NdType::constant(1, 3, 0)).components == 3);
}

TEST_CASE("ordered partition validation and enumeration") {
  CHECK_THROWS_AS(p(3, {0b011, 0b110}), TropmatError);   // overlap
  CHECK_THROWS_AS(p(3, {0b001, 0b010}), TropmatError);   // misses a letter
  CHECK_THROWS_AS(p(3, {0b001, 0u, 0b110}), TropmatError);  // empty part

  // Ordered Bell numbers 1, 3, 13, 75.
  CHECK(ordered_partitions(1).size() == 1);
  CHECK(ordered_partitions(2).size() == 3);
  CHECK(ordered_partitions(3).size() == 13);
  CHECK(ordered_partitions(4).size() == 75);

  SUBCASE("matches the surjection oracle as a set") {
    for (int d = 1; d <= 4; ++d) {
      auto mine = ordered_partitions(d);
      auto bank = oracles::ordered_partitions(d);
      std::vector<std::vector<Mask>> lhs;
      for (const auto& q : mine) lhs.push_back(q.parts());
      std::sort(lhs.begin(), lhs.end());
      std::sort(bank.begin(), bank.end());
      CHECK(lhs == bank);
    }
  }

  CHECK(p(6, {0b000111, 0b001000, 0b110000}).to_string() == "123,4,56");
}

TEST_CASE("degenerate alphabet d = 1") {
  NdType only = NdType::constant(3, 1, 0);
  CHECK(refine(only, p(1, {0b1})) == only);
  CHECK(total_refinements(only) == std::vector<NdType>{only});
  CHECK(arrangement_dim(only) == 0);
  CHECK(minkowski_dim(only) == 0);
  CHECK(is_bounded(only));
}

TEST_CASE("canonical order sorts by subset-lexicographic entries") {
  CHECK(t("(1,1)", 2) < t("(12,12)", 2));
  CHECK(t("(12,12)", 2) < t("(2,2)", 2));  // "12" precedes "2"
  CHECK(t("(13,1)", 3) < t("(2,1)", 3));
  std::vector<NdType> set = {t("(2,2)", 2), t("(1,1)", 2), t("(2,2)", 2)};
  CHECK(sorted_unique(set) ==
        std::vector<NdType>{t("(1,1)", 2), t("(2,2)", 2)});
}
