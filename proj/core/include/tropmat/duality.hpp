#pragma once

#include <optional>
#include <vector>

#include "tropmat/mixsd.hpp"
#include "tropmat/nd_type.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// One cell of the Poincaré dual: dimension complements the Minkowski
/// dimension, boundedness mirrors the type.
struct DualCell {
  NdType type;
  int dual_dim = 0;
  bool bounded = false;
};

/// The Poincaré dual of a mixed subdivision, kept purely
/// combinatorially: dual cells are poset elements ordered by the
/// reversed face relation. Construction validates the subdivision
/// (InvalidSubdivision on failure).
class DualComplex {
 public:
  explicit DualComplex(MixedSubdivision s);

  const MixedSubdivision& subdivision() const { return subdivision_; }
  const std::vector<DualCell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }

  int index_of(const NdType& t) const;  // -1 when absent

  /// Indices whose primal cells are faces of cell i (including i).
  const std::vector<int>& primal_faces(int i) const {
    return faces_[static_cast<size_t>(i)];
  }

  /// Reverse order: a's dual cell is a face of b's dual cell iff b's
  /// primal cell is a face of a's.
  bool dual_face(int a, int b) const;

 private:
  MixedSubdivision subdivision_;
  std::vector<DualCell> cells_;          // canonical type order
  std::vector<std::vector<int>> faces_;  // sorted
};

DualComplex dual_complex(const MixedSubdivision& s);

/// The i-th tropical pseudohyperplane: the sub-poset of dual cells
/// whose type has at least two letters in coordinate i.
struct PseudohyperplaneSlice {
  int coord = 0;                // 0-based
  std::vector<int> members;     // indices into DualComplex::cells()

  bool empty() const { return members.empty(); }
};

PseudohyperplaneSlice pseudohyperplane(const DualComplex& dual, int coord);
PseudohyperplaneSlice pseudohyperplane(const MixedSubdivision& s, int coord);

/// d = 3 structure check: the slice's dual 1-complex (dual vertices
/// and dual edges, rays half-open) must be a tree; fine subdivisions
/// show exactly three rays. UnsupportedDimension for d != 3.
struct SliceStructureReport {
  int coord = 0;
  bool nonempty = false;
  int vertex_count = 0;
  int bounded_edge_count = 0;
  int unbounded_edge_count = 0;
  int components = 0;
  bool connected = false;
  bool acyclic = false;

  bool tree() const { return nonempty && connected && acyclic; }
};

SliceStructureReport check_slice_structure(const DualComplex& dual, int coord);
SliceStructureReport check_slice_structure(const MixedSubdivision& s,
                                           int coord);

/// Combinatorial surrogates for the arrangement axioms: per-type cell
/// uniqueness, surrounding and comparability of the type set, and
/// agreement of type-boundedness with the geometric boundary test
/// (cell lies in a facet of the dilated simplex iff some letter is
/// unused). The PL conditions are out of scope.
struct ArrangementAxiomReport {
  bool uniqueness = false;
  bool surrounding = false;
  bool comparability = false;
  bool boundedness = false;

  std::optional<NdType> duplicate;
  std::optional<SurroundingEvidence> surrounding_failure;
  std::optional<IncomparableEvidence> incomparable;
  std::optional<NdType> bounded_mismatch;

  bool pass() const {
    return uniqueness && surrounding && comparability && boundedness;
  }
};

/// The list form tolerates duplicates so the uniqueness axiom has
/// something to detect.
ArrangementAxiomReport check_arrangement_axioms(
    const std::vector<NdType>& cells, int n, int d);

ArrangementAxiomReport check_arrangement_axioms(const MixedSubdivision& s);

}  // namespace tropmat
