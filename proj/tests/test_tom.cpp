#include <doctest.h>

#include "oracles.hpp"
#include "tropmat/error.hpp"
#include "tropmat/tom.hpp"

using namespace tropmat;

namespace {

NdType t(const char* text, int d) { return NdType::parse(text, d); }

TypeCollection segment_tom() {  // types of one degenerate pair of lines
  return TypeCollection(2, 2,
                        {t("(1,1)", 2), t("(2,2)", 2), t("(12,12)", 2)});
}

TypeCollection five_type_tom() {  // two distinct breakpoints on a line
  return TypeCollection(2, 2,
                        {t("(1,1)", 2), t("(12,1)", 2), t("(2,1)", 2),
                         t("(2,12)", 2), t("(2,2)", 2)});
}

TypeCollection all_subsets_tom(int d) {  // one hyperplane, n = 1
  std::vector<NdType> types;
  for (Mask m = 1; m <= full_mask(d); ++m) {
    types.push_back(NdType(1, d, {m}));
  }
  return TypeCollection(1, d, std::move(types));
}

/// Independent membership predicate for an elimination result.
bool valid_elimination(const NdType& a, const NdType& b, int j,
                       const NdType& c) {
  if (c.entry(j) != (a.entry(j) | b.entry(j))) return false;
  for (int k = 0; k < a.n(); ++k) {
    Mask ck = c.entry(k);
    if (ck != a.entry(k) && ck != b.entry(k) &&
        ck != (a.entry(k) | b.entry(k))) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("boundary axiom") {
  CHECK(check_boundary(segment_tom()).pass);
  CHECK(check_boundary(all_subsets_tom(3)).pass);

  BoundaryVerdict v =
      check_boundary(TypeCollection(2, 2, {t("(1,1)", 2)}));
  CHECK_FALSE(v.pass);
  CHECK(*v.missing == t("(2,2)", 2));
}

TEST_CASE("comparability axiom") {
  CHECK(check_comparability(segment_tom()).pass);
  CHECK(check_comparability(TypeCollection(3, 3, {t("(1,2,3)", 3)})).pass);

  TypeCollection bad(3, 3, {t("(12,23,13)", 3), t("(1,2,3)", 3)});
  ComparabilityVerdict v = check_comparability(bad);
  CHECK_FALSE(v.pass);
  REQUIRE(v.evidence.has_value());
  CHECK(witness_replays(comparability_graph(v.evidence->a, v.evidence->b),
                        v.evidence->cycle));
}

TEST_CASE("elimination") {
  TypeCollection m = segment_tom();
  NdType a = t("(1,1)", 2);
  NdType b = t("(2,2)", 2);

  CHECK(*eliminate_search(m, a, b, 0) == t("(12,12)", 2));
  CHECK(*eliminate_search(m, a, a, 1) == a);
  CHECK_FALSE(
      eliminate_search(TypeCollection(2, 2, {a, b}), a, b, 0).has_value());
  CHECK_THROWS_WITH_AS(eliminate_search(m, t("(2,1)", 2), b, 0),
                       doctest::Contains("NotMember"), TropmatError);

  SUBCASE("successful searches satisfy both clauses") {
    TypeCollection five = five_type_tom();
    for (const NdType& x : five.types()) {
      for (const NdType& y : five.types()) {
        for (int j = 0; j < five.n(); ++j) {
          auto c = eliminate_search(five, x, y, j);
          REQUIRE(c.has_value());
          CHECK(valid_elimination(x, y, j, *c));
          CHECK(five.contains(*c));
        }
      }
    }
  }

  SUBCASE("whole-collection check reports the failing triple") {
    EliminationVerdict v =
        check_elimination(TypeCollection(2, 2, {a, b}));
    CHECK_FALSE(v.pass);
    REQUIRE(v.evidence.has_value());
    CHECK(v.evidence->a == a);
    CHECK(v.evidence->b == b);
  }
}

TEST_CASE("surrounding axiom") {
  CHECK(check_surrounding(segment_tom()).pass);
  CHECK(check_surrounding(all_subsets_tom(3)).pass);

  SurroundingVerdict v = check_surrounding(
      TypeCollection(2, 2, {t("(12,12)", 2), t("(1,1)", 2)}));
  CHECK_FALSE(v.pass);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->refinement == t("(2,2)", 2));
  CHECK(refine(v.evidence->type, v.evidence->partition) ==
        v.evidence->refinement);
}

TEST_CASE("the aggregate axiom check") {
  CHECK(check_tom(segment_tom()).pass());
  CHECK(check_tom(five_type_tom()).pass());
  CHECK(check_tom(all_subsets_tom(3)).pass());

  AxiomReport r = check_tom(
      TypeCollection(2, 2, {t("(1,1)", 2), t("(2,2)", 2)}));
  CHECK_FALSE(r.pass());
  CHECK(r.boundary.pass);
  CHECK(r.comparability.pass);
  CHECK_FALSE(r.elimination.pass);
}

TEST_CASE("deletion") {
  TypeCollection del = tom_deletion(segment_tom(), 1);
  CHECK(del.n() == 1);
  CHECK(del.types() ==
        std::vector<NdType>{t("(1)", 2), t("(12)", 2), t("(2)", 2)});

  CHECK(tom_deletion(five_type_tom(), 1).types() ==
        std::vector<NdType>{t("(1)", 2), t("(12)", 2), t("(2)", 2)});

  CHECK_THROWS_WITH_AS(tom_deletion(all_subsets_tom(3), 0),
                       doctest::Contains("InvalidParameters"), TropmatError);

  SUBCASE("deletions of passing collections pass") {
    for (int i = 0; i < 2; ++i) {
      CHECK(check_tom(tom_deletion(segment_tom(), i)).pass());
      CHECK(check_tom(tom_deletion(five_type_tom(), i)).pass());
    }
  }
}

TEST_CASE("contraction") {
  TypeCollection con = tom_contraction(segment_tom(), 1);
  CHECK(con.d() == 1);
  CHECK(con.types() == std::vector<NdType>{t("(1,1)", 1)});

  SUBCASE("one-hyperplane contraction relabels the survivors") {
    TypeCollection c = tom_contraction(all_subsets_tom(3), 2);
    CHECK(c.types() ==
          std::vector<NdType>{t("(1)", 2), t("(12)", 2), t("(2)", 2)});
    CHECK(check_tom(c).pass());
  }

  CHECK_THROWS_WITH_AS(tom_contraction(con, 0),
                       doctest::Contains("InvalidParameters"), TropmatError);

  SUBCASE("contractions of passing collections pass") {
    for (int j = 0; j < 2; ++j) {
      CHECK(check_tom(tom_contraction(segment_tom(), j)).pass());
      CHECK(check_tom(tom_contraction(five_type_tom(), j)).pass());
    }
  }
}

TEST_CASE("classification by arrangement dimension") {
  auto buckets = classify(segment_tom());
  CHECK(buckets[0] == std::vector<NdType>{t("(12,12)", 2)});
  CHECK(buckets[1] ==
        std::vector<NdType>{t("(1,1)", 2), t("(2,2)", 2)});
  CHECK(region_topes(segment_tom()) ==
        std::vector<NdType>{t("(1,1)", 2), t("(2,2)", 2)});

  auto line = classify(all_subsets_tom(3));
  CHECK(line[0] == std::vector<NdType>{t("(123)", 3)});
  CHECK(line[1].size() == 3);  // the two-letter edges
  CHECK(line[2].size() == 3);  // the singleton topes

  SUBCASE("buckets partition the collection within 0..d-1") {
    size_t total = 0;
    for (const auto& [dim, members] : classify(five_type_tom())) {
      CHECK(dim >= 0);
      CHECK(dim <= 1);
      total += members.size();
    }
    CHECK(total == five_type_tom().size());
  }

  SUBCASE("constant types are topes") {
    for (int j = 0; j < 3; ++j) {
      CHECK(arrangement_dim(NdType::constant(2, 3, j)) == 2);
    }
  }
}
