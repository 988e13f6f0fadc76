#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tropmat/comparability.hpp"
#include "tropmat/nd_type.hpp"

namespace tropmat {

/// A finite set of (n,d)-types, deduplicated and canonically ordered.
/// Candidate tropical oriented matroid; rank d, size n.
class TypeCollection {
 public:
  TypeCollection(int n, int d, std::vector<NdType> types);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<NdType>& types() const { return types_; }
  bool empty() const { return types_.empty(); }
  std::size_t size() const { return types_.size(); }

  bool contains(const NdType& t) const;

  bool operator==(const TypeCollection& other) const = default;

 private:
  int n_;
  int d_;
  std::vector<NdType> types_;
};

struct BoundaryVerdict {
  bool pass = false;
  std::optional<NdType> missing;
};

struct IncomparableEvidence {
  NdType a;
  NdType b;
  CycleWitness cycle;
};

struct ComparabilityVerdict {
  bool pass = false;
  std::optional<IncomparableEvidence> evidence;
};

struct EliminationEvidence {
  NdType a;
  NdType b;
  int position;  // 0-based
};

struct EliminationVerdict {
  bool pass = false;
  std::optional<EliminationEvidence> evidence;
};

struct SurroundingEvidence {
  NdType type;
  OrderedPartition partition;
  NdType refinement;
};

struct SurroundingVerdict {
  bool pass = false;
  std::optional<SurroundingEvidence> evidence;
};

/// Aggregate of the four axiom checks. Every failed verdict carries
/// replayable evidence; a bare fail is a defect.
struct AxiomReport {
  BoundaryVerdict boundary;
  ComparabilityVerdict comparability;
  EliminationVerdict elimination;
  SurroundingVerdict surrounding;

  bool pass() const {
    return boundary.pass && comparability.pass && elimination.pass &&
           surrounding.pass;
  }
};

/// Boundary axiom: every constant type (j,...,j) is present.
BoundaryVerdict check_boundary(const TypeCollection& m);

/// Comparability axiom: the comparability graph of every pair is
/// acyclic. First failing pair in canonical order is reported.
ComparabilityVerdict check_comparability(const TypeCollection& m);

/// One elimination instance: some C in M with C_j = A_j ∪ B_j and
/// C_k in {A_k, B_k, A_k ∪ B_k} for all k; returns the canonically
/// first such C. A and B must be members (NotMember). position is
/// 0-based.
std::optional<NdType> eliminate_search(const TypeCollection& m,
                                       const NdType& a, const NdType& b,
                                       int position);

/// Elimination axiom over all pairs and positions.
EliminationVerdict check_elimination(const TypeCollection& m);

/// Surrounding axiom: M is closed under refinement by every ordered
/// partition of the alphabet. Enumeration capped at d <= 8.
SurroundingVerdict check_surrounding(const TypeCollection& m);

AxiomReport check_tom(const TypeCollection& m);

/// Deletes coordinate i (0-based) from every type; (n-1,d) result.
/// InvalidParameters when n = 1.
TypeCollection tom_deletion(const TypeCollection& m, int coord);

/// Keeps the types avoiding letter j (0-based) entirely and shifts the
/// letters above j down; (n,d-1) result. InvalidParameters when d = 1.
TypeCollection tom_contraction(const TypeCollection& m, int letter);

/// Buckets the collection by arrangement dimension. Vertices sit in
/// bucket 0, edges in 1, topes in d-1.
std::map<int, std::vector<NdType>> classify(const TypeCollection& m);

/// The topes of the collection: types of full arrangement dimension
/// d-1 (tuples of singletons). "Region" distinguishes these from the
/// 0-cells of a subdivision, which the duality sends them to.
std::vector<NdType> region_topes(const TypeCollection& m);

}  // namespace tropmat
