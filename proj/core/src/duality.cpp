#include "tropmat/duality.hpp"

#include <algorithm>

#include "tropmat/comparability.hpp"
#include "tropmat/error.hpp"
#include "union_find.hpp"

namespace tropmat {

DualComplex::DualComplex(MixedSubdivision s) : subdivision_(std::move(s)) {
  ValidationReport report = validate_mixsd(subdivision_);
  if (!report.pass()) {
    throw TropmatError(Errc::invalid_subdivision,
                       "not a mixed subdivision; run validate_mixsd for "
                       "evidence");
  }
  const auto& cells = subdivision_.cells();
  cells_.reserve(cells.size());
  for (const NdType& c : cells) {
    cells_.push_back({c, arrangement_dim(c), is_bounded(c)});
  }
  faces_.resize(cells_.size());
  for (size_t i = 0; i < cells_.size(); ++i) {
    for (const NdType& f : faces(cells_[i].type)) {
      int j = index_of(f);
      if (j >= 0) faces_[i].push_back(j);
    }
    std::sort(faces_[i].begin(), faces_[i].end());
  }
}

int DualComplex::index_of(const NdType& t) const {
  const auto& cells = subdivision_.cells();
  auto it = std::lower_bound(cells.begin(), cells.end(), t);
  if (it == cells.end() || !(*it == t)) return -1;
  return static_cast<int>(it - cells.begin());
}

bool DualComplex::dual_face(int a, int b) const {
  const auto& fs = faces_[static_cast<size_t>(a)];
  return std::binary_search(fs.begin(), fs.end(), b);
}

DualComplex dual_complex(const MixedSubdivision& s) { return DualComplex(s); }

PseudohyperplaneSlice pseudohyperplane(const DualComplex& dual, int coord) {
  const int n = dual.subdivision().n();
  if (coord < 0 || coord >= n) {
    throw TropmatError(Errc::out_of_range, "slice coordinate");
  }
  PseudohyperplaneSlice slice;
  slice.coord = coord;
  for (int i = 0; i < dual.size(); ++i) {
    if (mask_card(dual.cells()[static_cast<size_t>(i)].type.entry(coord)) >=
        2) {
      slice.members.push_back(i);
    }
  }
  return slice;
}

PseudohyperplaneSlice pseudohyperplane(const MixedSubdivision& s, int coord) {
  return pseudohyperplane(DualComplex(s), coord);
}

SliceStructureReport check_slice_structure(const DualComplex& dual,
                                           int coord) {
  if (dual.subdivision().d() != 3) {
    throw TropmatError(Errc::unsupported_dimension,
                       "slice structure check is specialized to d = 3");
  }
  PseudohyperplaneSlice slice = pseudohyperplane(dual, coord);

  SliceStructureReport report;
  report.coord = coord;
  report.nonempty = !slice.empty();

  std::vector<int> vertices;  // dual dimension 0 = maximal cells
  std::vector<int> edges;     // dual dimension 1 = ridges
  for (int i : slice.members) {
    const DualCell& c = dual.cells()[static_cast<size_t>(i)];
    if (c.dual_dim == 0) vertices.push_back(i);
    if (c.dual_dim == 1) edges.push_back(i);
  }
  report.vertex_count = static_cast<int>(vertices.size());

  detail::UnionFind uf(static_cast<int>(vertices.size()));
  bool acyclic = true;
  for (int e : edges) {
    const bool bounded = dual.cells()[static_cast<size_t>(e)].bounded;
    std::vector<int> endpoints;
    for (size_t v = 0; v < vertices.size(); ++v) {
      // The ridge is a face of the maximal cell iff the dual vertex
      // bounds the dual edge.
      if (dual.dual_face(vertices[v], e)) {
        endpoints.push_back(static_cast<int>(v));
      }
    }
    if (bounded) {
      ++report.bounded_edge_count;
      if (endpoints.size() == 2) {
        if (!uf.unite(endpoints[0], endpoints[1])) acyclic = false;
      } else {
        acyclic = false;  // malformed edge; cannot be a tree
      }
    } else {
      ++report.unbounded_edge_count;  // a ray: one endpoint, no joins
    }
  }
  int components = 0;
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++components;
  }
  report.components = components;
  report.connected = report.nonempty && components <= 1;
  report.acyclic = acyclic;
  return report;
}

SliceStructureReport check_slice_structure(const MixedSubdivision& s,
                                           int coord) {
  return check_slice_structure(DualComplex(s), coord);
}

ArrangementAxiomReport check_arrangement_axioms(
    const std::vector<NdType>& cells, int n, int d) {
  ArrangementAxiomReport report;

  std::vector<NdType> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  report.uniqueness = true;
  for (size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) {
      report.uniqueness = false;
      report.duplicate = sorted[k];
      break;
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  TypeCollection collection(n, d, sorted);
  SurroundingVerdict surrounding = check_surrounding(collection);
  report.surrounding = surrounding.pass;
  report.surrounding_failure = std::move(surrounding.evidence);
  ComparabilityVerdict comparability = check_comparability(collection);
  report.comparability = comparability.pass;
  report.incomparable = std::move(comparability.evidence);

  // Boundedness: the cell misses the interior iff it lies in a facet
  // of the dilated simplex iff some coordinate vanishes on all its
  // vertex points. That geometric route must agree with the letters.
  report.boundedness = true;
  for (const NdType& c : sorted) {
    std::vector<LatticePoint> points = cell_vertex_points(c);
    bool on_boundary = false;
    for (int j = 0; j < d && !on_boundary; ++j) {
      on_boundary = std::all_of(points.begin(), points.end(),
                                [j](const LatticePoint& p) {
                                  return p.x[static_cast<size_t>(j)] == 0;
                                });
    }
    if (on_boundary == is_bounded(c)) {
      report.boundedness = false;
      report.bounded_mismatch = c;
      break;
    }
  }
  return report;
}

ArrangementAxiomReport check_arrangement_axioms(const MixedSubdivision& s) {
  return check_arrangement_axioms(s.cells(), s.n(), s.d());
}

}  // namespace tropmat
