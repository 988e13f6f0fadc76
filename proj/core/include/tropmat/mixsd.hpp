#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/nd_type.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// A lattice point of the dilated simplex n·Δ^{d-1}: d nonnegative
/// integers summing to n.
struct LatticePoint {
  std::vector<long long> x;

  bool operator==(const LatticePoint&) const = default;
  bool operator<(const LatticePoint& other) const { return x < other.x; }

  std::string to_string() const;
};

/// Standard embedding of a tope (all entries singletons): coordinate j
/// counts the occurrences of letter j. NotTotal otherwise.
LatticePoint embed_tope(const NdType& v);

/// The vertices of the Minkowski cell of A: embedded total
/// refinements, deduplicated.
std::vector<LatticePoint> cell_vertex_points(const NdType& a);

/// All faces of the cell of A: refinements by every ordered partition,
/// deduplicated, including A itself.
std::vector<NdType> faces(const NdType& a);

/// A set of Minkowski cells of n·Δ^{d-1}, stored as types. The cell
/// list is kept face-closed for library-produced values; maximal cells
/// are the full-dimensional ones (minkowski_dim d-1). Immutable.
class MixedSubdivision {
 public:
  /// Regenerates the face closure of the given maximal cells.
  static MixedSubdivision from_maximal(int n, int d,
                                       std::vector<NdType> maximal);

  /// Takes the cell set as given (deduplicated) and derives the
  /// maximal cells from it.
  static MixedSubdivision from_cells(int n, int d, std::vector<NdType> cells);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<NdType>& cells() const { return cells_; }
  const std::vector<NdType>& maximal_cells() const { return maximal_; }

  /// The 0-dimensional cells. Under the duality these are the same
  /// tuples of singletons as the region topes of a tropical oriented
  /// matroid.
  std::vector<NdType> vertex_topes() const;

  bool contains_cell(const NdType& t) const;

  bool operator==(const MixedSubdivision&) const = default;

 private:
  MixedSubdivision(int n, int d, std::vector<NdType> cells,
                   std::vector<NdType> maximal);

  int n_;
  int d_;
  std::vector<NdType> cells_;
  std::vector<NdType> maximal_;
};

/// The mixed subdivision whose cells are the types of M. M must pass
/// all four axioms (NotATom otherwise); its vertices (arrangement
/// dimension 0) become the maximal cells.
MixedSubdivision tom_to_mixsd(const TypeCollection& m);

struct RidgeEvidence {
  NdType ridge;
  int incident_maximal = 0;
  bool bounded = false;
};

/// Combinatorial certificate that a cell set is a mixed subdivision of
/// n·Δ^{d-1}: face closure, pairwise comparability, the ridge
/// coverage condition (bounded ridges in exactly two maximal cells,
/// unbounded in exactly one), presence of the corner types, and a
/// connected dual graph. The volume check is a secondary oracle run on
/// demand. Failures carry replayable evidence; nothing here throws for
/// mathematical reasons.
struct ValidationReport {
  bool face_closure = false;
  bool comparability = false;
  bool ridge = false;
  bool boundary = false;
  bool connectivity = false;
  std::optional<bool> volume;

  int maximal_count = 0;
  int dual_components = 0;
  long long volume_total = 0;
  long long volume_expected = 0;

  std::optional<SurroundingEvidence> closure_failure;
  std::optional<IncomparableEvidence> incomparable;
  std::optional<RidgeEvidence> ridge_failure;
  std::optional<NdType> missing_boundary;

  bool pass() const {
    return face_closure && comparability && ridge && boundary &&
           connectivity && volume.value_or(true);
  }
};

ValidationReport validate_mixsd(const std::vector<NdType>& cells, int n,
                                int d, bool volume_check = false);

ValidationReport validate_mixsd(const MixedSubdivision& s,
                                bool volume_check = false);

/// Lattice-normalized (d-1)-volume of the cell of A, which must be
/// full-dimensional (NotFullDim). Computed by a pulling triangulation
/// over the combinatorial face lattice with integer determinants in
/// the chart that drops the last coordinate.
long long normalized_volume(const NdType& a);

/// Fine iff every cell's type graph is a forest.
bool is_fine(const MixedSubdivision& s);

/// The reconstruction predicate: A is a union of topes of T, all of
/// A's total refinements are topes, and every tope of T inside A is a
/// refinement of A.
struct NiceTypeReport {
  bool union_of_topes = false;
  bool refinements_are_topes = false;
  bool inner_topes_refine = false;

  std::optional<NdType> missing_refinement;  // total refinement not in T
  std::optional<NdType> offending_tope;      // tope inside A, not a refinement

  bool nice() const {
    return union_of_topes && refinements_are_topes && inner_topes_refine;
  }
};

NiceTypeReport nice_type_report(const NdType& a,
                                const std::vector<NdType>& topes);

bool is_nice_type(const NdType& a, const std::vector<NdType>& topes);

/// Rebuilds the subdivision whose 0-cells are exactly T by scanning
/// all candidate types for niceness. When T is the tope set of a valid
/// subdivision S, the result is S cell-for-cell.
MixedSubdivision reconstruct_from_topes(const std::vector<NdType>& topes,
                                        int n, int d);

/// Drops coordinate i from every cell; a subdivision of (n-1)·Δ^{d-1}.
MixedSubdivision mixsd_deletion(const MixedSubdivision& s, int coord);

/// Keeps the cells avoiding letter j and relabels; the induced
/// subdivision of the j-th facet, an (n,d-1) object.
MixedSubdivision mixsd_contraction(const MixedSubdivision& s, int letter);

}  // namespace tropmat
