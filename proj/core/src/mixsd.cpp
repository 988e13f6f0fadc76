#include "tropmat/mixsd.hpp"

#include <algorithm>
#include <map>

#include "tropmat/error.hpp"
#include "tropmat/rational.hpp"
#include "union_find.hpp"

namespace tropmat {

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (size_t k = 0; k < x.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(x[k]);
  }
  out.push_back(')');
  return out;
}

LatticePoint embed_tope(const NdType& v) {
  if (!v.is_total()) {
    throw TropmatError(Errc::not_total,
                       v.to_string() + " has a non-singleton entry");
  }
  LatticePoint p{std::vector<long long>(static_cast<size_t>(v.d()), 0)};
  for (int i = 0; i < v.n(); ++i) {
    ++p.x[static_cast<size_t>(mask_min(v.entry(i)))];
  }
  return p;
}

std::vector<LatticePoint> cell_vertex_points(const NdType& a) {
  std::vector<LatticePoint> points;
  for (const NdType& t : total_refinements(a)) {
    points.push_back(embed_tope(t));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<NdType> faces(const NdType& a) {
  std::vector<NdType> out;
  for_each_ordered_partition(a.d(), [&](const OrderedPartition& p) {
    out.push_back(refine(a, p));
  });
  return sorted_unique(std::move(out));
}

MixedSubdivision::MixedSubdivision(int n, int d, std::vector<NdType> cells,
                                   std::vector<NdType> maximal)
    : n_(n), d_(d), cells_(std::move(cells)), maximal_(std::move(maximal)) {}

MixedSubdivision MixedSubdivision::from_maximal(int n, int d,
                                                std::vector<NdType> maximal) {
  std::vector<NdType> closure;
  for (const NdType& m : maximal) {
    if (m.n() != n || m.d() != d) {
      throw TropmatError(Errc::parameter_mismatch,
                         "cell " + m.to_string() + " has different (n,d)");
    }
    auto fs = faces(m);
    closure.insert(closure.end(), fs.begin(), fs.end());
  }
  return MixedSubdivision(n, d, sorted_unique(std::move(closure)),
                          sorted_unique(std::move(maximal)));
}

MixedSubdivision MixedSubdivision::from_cells(int n, int d,
                                              std::vector<NdType> cells) {
  cells = sorted_unique(std::move(cells));
  std::vector<NdType> maximal;
  for (const NdType& c : cells) {
    if (c.n() != n || c.d() != d) {
      throw TropmatError(Errc::parameter_mismatch,
                         "cell " + c.to_string() + " has different (n,d)");
    }
    if (minkowski_dim(c) == d - 1) maximal.push_back(c);
  }
  return MixedSubdivision(n, d, std::move(cells), std::move(maximal));
}

std::vector<NdType> MixedSubdivision::vertex_topes() const {
  std::vector<NdType> out;
  for (const NdType& c : cells_) {
    if (c.is_total()) out.push_back(c);
  }
  return out;
}

bool MixedSubdivision::contains_cell(const NdType& t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

MixedSubdivision tom_to_mixsd(const TypeCollection& m) {
  AxiomReport report = check_tom(m);
  if (!report.pass()) {
    throw TropmatError(Errc::not_a_tom,
                       "collection fails the axioms; run check_tom for "
                       "evidence");
  }
  return MixedSubdivision::from_cells(m.n(), m.d(), m.types());
}

namespace {

bool contains(const std::vector<NdType>& sorted, const NdType& t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

}  // namespace

ValidationReport validate_mixsd(const std::vector<NdType>& cells_in, int n,
                                int d, bool volume_check) {
  if (n < 1 || d < 1 || d > kMaxLetters) {
    throw TropmatError(Errc::invalid_parameters, "bad parameters");
  }
  std::vector<NdType> cells = sorted_unique(cells_in);
  for (const NdType& c : cells) {
    if (c.n() != n || c.d() != d) {
      throw TropmatError(Errc::parameter_mismatch,
                         "cell " + c.to_string() + " has different (n,d)");
    }
  }

  ValidationReport report;

  // (a) face closure
  report.face_closure = true;
  for (const NdType& c : cells) {
    if (!report.face_closure) break;
    for_each_ordered_partition(d, [&](const OrderedPartition& p) {
      if (!report.face_closure) return;
      NdType r = refine(c, p);
      if (!contains(cells, r)) {
        report.face_closure = false;
        report.closure_failure = SurroundingEvidence{c, p, std::move(r)};
      }
    });
  }

  // (b) pairwise comparability
  report.comparability = true;
  for (size_t p = 0; p < cells.size() && report.comparability; ++p) {
    for (size_t q = p + 1; q < cells.size(); ++q) {
      AcyclicityResult r = is_acyclic(comparability_graph(cells[p], cells[q]));
      if (!r.acyclic) {
        report.comparability = false;
        report.incomparable =
            IncomparableEvidence{cells[p], cells[q], std::move(*r.cycle)};
        break;
      }
    }
  }

  // corner types (j,...,j)
  report.boundary = true;
  for (int j = 0; j < d; ++j) {
    NdType corner = NdType::constant(n, d, j);
    if (!contains(cells, corner)) {
      report.boundary = false;
      report.missing_boundary = std::move(corner);
      break;
    }
  }

  // (c) ridge coverage: bounded ridges lie in exactly two maximal
  // cells, unbounded ones in exactly one.
  std::vector<NdType> maximal;
  for (const NdType& c : cells) {
    if (minkowski_dim(c) == d - 1) maximal.push_back(c);
  }
  report.maximal_count = static_cast<int>(maximal.size());

  std::vector<std::vector<NdType>> maximal_faces;
  maximal_faces.reserve(maximal.size());
  for (const NdType& m : maximal) maximal_faces.push_back(faces(m));

  report.ridge = true;
  std::map<NdType, std::vector<int>> ridge_incidence;
  for (const NdType& c : cells) {
    if (minkowski_dim(c) != d - 2) continue;
    std::vector<int> incident;
    for (size_t mi = 0; mi < maximal.size(); ++mi) {
      if (contains(maximal_faces[mi], c)) {
        incident.push_back(static_cast<int>(mi));
      }
    }
    const bool bounded = is_bounded(c);
    const int expected = bounded ? 2 : 1;
    if (report.ridge && static_cast<int>(incident.size()) != expected) {
      report.ridge = false;
      report.ridge_failure =
          RidgeEvidence{c, static_cast<int>(incident.size()), bounded};
    }
    ridge_incidence.emplace(c, std::move(incident));
  }

  // (d) dual graph connectivity on the maximal cells
  if (maximal.empty()) {
    report.connectivity = false;
    report.dual_components = 0;
  } else {
    detail::UnionFind uf(static_cast<int>(maximal.size()));
    for (const auto& [ridge_cell, incident] : ridge_incidence) {
      for (size_t k = 1; k < incident.size(); ++k) {
        uf.unite(incident[0], incident[k]);
      }
    }
    int components = 0;
    for (int v = 0; v < static_cast<int>(maximal.size()); ++v) {
      if (uf.find(v) == v) ++components;
    }
    report.dual_components = components;
    report.connectivity = components == 1;
  }

  if (volume_check) {
    long long expected = 1;
    for (int k = 0; k < d - 1; ++k) expected *= n;
    report.volume_expected = expected;
    long long total = 0;
    for (const NdType& m : maximal) total += normalized_volume(m);
    report.volume_total = total;
    report.volume = total == expected;
  }

  return report;
}

ValidationReport validate_mixsd(const MixedSubdivision& s, bool volume_check) {
  return validate_mixsd(s.cells(), s.n(), s.d(), volume_check);
}

namespace {

/// Pulling triangulation of the face lattice: cone the canonically
/// smallest vertex over the recursively triangulated facets that avoid
/// it. Simplices are returned as vertex-point lists.
class PullingTriangulator {
 public:
  const std::vector<std::vector<LatticePoint>>& simplices(const NdType& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;

    std::vector<std::vector<LatticePoint>> result;
    const int dim = minkowski_dim(f);
    std::vector<LatticePoint> points = cell_vertex_points(f);
    if (dim == 0) {
      result.push_back({points.front()});
      return memo_.emplace(f, std::move(result)).first->second;
    }
    const LatticePoint apex = points.front();  // lexicographic minimum
    for (const NdType& g : faces(f)) {
      if (minkowski_dim(g) != dim - 1) continue;
      std::vector<LatticePoint> gp = cell_vertex_points(g);
      if (std::binary_search(gp.begin(), gp.end(), apex)) continue;
      for (const auto& s : simplices(g)) {
        std::vector<LatticePoint> cone;
        cone.reserve(s.size() + 1);
        cone.push_back(apex);
        cone.insert(cone.end(), s.begin(), s.end());
        result.push_back(std::move(cone));
      }
    }
    return memo_.emplace(f, std::move(result)).first->second;
  }

 private:
  std::map<NdType, std::vector<std::vector<LatticePoint>>> memo_;
};

/// |det| of the (k x k) integer matrix of differences, exact.
long long simplex_volume(const std::vector<LatticePoint>& simplex, int k) {
  std::vector<std::vector<BigInt>> m(static_cast<size_t>(k),
                                     std::vector<BigInt>(static_cast<size_t>(k)));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          simplex[static_cast<size_t>(r + 1)].x[static_cast<size_t>(c)] -
          simplex[0].x[static_cast<size_t>(c)];
    }
  }
  // Fraction-free Gaussian elimination (Bareiss).
  BigInt sign = 1;
  BigInt prev = 1;
  for (int p = 0; p < k; ++p) {
    size_t pivot_row = static_cast<size_t>(p);
    while (pivot_row < static_cast<size_t>(k) &&
           m[pivot_row][static_cast<size_t>(p)] == 0) {
      ++pivot_row;
    }
    if (pivot_row == static_cast<size_t>(k)) return 0;
    if (pivot_row != static_cast<size_t>(p)) {
      std::swap(m[pivot_row], m[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (size_t r = static_cast<size_t>(p) + 1; r < static_cast<size_t>(k);
         ++r) {
      for (size_t c = static_cast<size_t>(p) + 1; c < static_cast<size_t>(k);
           ++c) {
        m[r][c] = (m[static_cast<size_t>(p)][static_cast<size_t>(p)] * m[r][c] -
                   m[r][static_cast<size_t>(p)] *
                       m[static_cast<size_t>(p)][c]) /
                  prev;
      }
      m[r][static_cast<size_t>(p)] = 0;
    }
    prev = m[static_cast<size_t>(p)][static_cast<size_t>(p)];
  }
  BigInt det = sign * m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
  if (det < 0) det = -det;
  return det.convert_to<long long>();
}

}  // namespace

long long normalized_volume(const NdType& a) {
  const int dim = minkowski_dim(a);
  if (dim != a.d() - 1) {
    throw TropmatError(Errc::not_full_dim,
                       a.to_string() + " has Minkowski dimension " +
                           std::to_string(dim));
  }
  if (dim == 0) return 1;  // a point; n^0 = 1 convention
  PullingTriangulator tri;
  long long total = 0;
  for (const auto& s : tri.simplices(a)) {
    total += simplex_volume(s, dim);
  }
  return total;
}

bool is_fine(const MixedSubdivision& s) {
  return std::all_of(s.cells().begin(), s.cells().end(),
                     [](const NdType& c) { return type_graph(c).forest; });
}

NiceTypeReport nice_type_report(const NdType& a,
                                const std::vector<NdType>& topes) {
  NiceTypeReport report;

  std::vector<Mask> cover(static_cast<size_t>(a.n()), 0);
  std::vector<const NdType*> inner;
  for (const NdType& t : topes) {
    if (!t.is_total()) {
      throw TropmatError(Errc::not_total, t.to_string());
    }
    if (t.n() != a.n() || t.d() != a.d()) {
      throw TropmatError(Errc::parameter_mismatch, t.to_string());
    }
    if (leq(t, a)) {
      inner.push_back(&t);
      for (int i = 0; i < a.n(); ++i) {
        cover[static_cast<size_t>(i)] |= t.entry(i);
      }
    }
  }
  report.union_of_topes =
      !inner.empty() && cover == a.entries();

  report.refinements_are_topes = true;
  std::vector<NdType> sorted_topes = sorted_unique(topes);
  for (const NdType& r : total_refinements(a)) {
    if (!contains(sorted_topes, r)) {
      report.refinements_are_topes = false;
      report.missing_refinement = r;
      break;
    }
  }

  report.inner_topes_refine = true;
  for (const NdType* t : inner) {
    if (!refinement_witness(*t, a).found()) {
      report.inner_topes_refine = false;
      report.offending_tope = *t;
      break;
    }
  }
  return report;
}

bool is_nice_type(const NdType& a, const std::vector<NdType>& topes) {
  return nice_type_report(a, topes).nice();
}

namespace {

constexpr long long kMaxScan = 10'000'000;

void check_scan_cap(int n, int d) {
  long long total = 1;
  const long long per_coord = (1ll << d) - 1;
  for (int i = 0; i < n; ++i) {
    total *= per_coord;
    if (total > kMaxScan) {
      throw TropmatError(Errc::limit_exceeded,
                         "candidate scan exceeds " + std::to_string(kMaxScan));
    }
  }
}

}  // namespace

MixedSubdivision reconstruct_from_topes(const std::vector<NdType>& topes,
                                        int n, int d) {
  if (topes.empty()) {
    throw TropmatError(Errc::empty_input, "no topes given");
  }
  for (const NdType& t : topes) {
    if (t.n() != n || t.d() != d) {
      throw TropmatError(Errc::parameter_mismatch, t.to_string());
    }
    if (!t.is_total()) {
      throw TropmatError(Errc::not_total, t.to_string());
    }
  }
  check_scan_cap(n, d);
  std::vector<NdType> sorted_topes = sorted_unique(topes);

  std::vector<NdType> cells;
  std::vector<Mask> entries(static_cast<size_t>(n));
  auto scan = [&](auto&& self, int i) -> void {
    if (i == n) {
      // Cheap first filter: the candidate must be the union of the
      // topes it contains.
      std::vector<Mask> cover(static_cast<size_t>(n), 0);
      bool any = false;
      for (const NdType& t : sorted_topes) {
        bool inside = true;
        for (int k = 0; k < n; ++k) {
          if ((t.entry(k) & ~entries[static_cast<size_t>(k)]) != 0) {
            inside = false;
            break;
          }
        }
        if (inside) {
          any = true;
          for (int k = 0; k < n; ++k) {
            cover[static_cast<size_t>(k)] |= t.entry(k);
          }
        }
      }
      if (!any || cover != entries) return;
      NdType candidate(n, d, entries);
      if (is_nice_type(candidate, sorted_topes)) {
        cells.push_back(std::move(candidate));
      }
      return;
    }
    for (Mask m = 1; m <= full_mask(d); ++m) {
      entries[static_cast<size_t>(i)] = m;
      self(self, i + 1);
    }
  };
  scan(scan, 0);
  return MixedSubdivision::from_cells(n, d, std::move(cells));
}

MixedSubdivision mixsd_deletion(const MixedSubdivision& s, int coord) {
  if (s.n() == 1) {
    throw TropmatError(Errc::invalid_parameters,
                       "deletion would leave zero coordinates");
  }
  if (coord < 0 || coord >= s.n()) {
    throw TropmatError(Errc::out_of_range, "deletion coordinate");
  }
  std::vector<NdType> out;
  out.reserve(s.cells().size());
  for (const NdType& c : s.cells()) {
    std::vector<Mask> entries;
    entries.reserve(static_cast<size_t>(s.n() - 1));
    for (int i = 0; i < s.n(); ++i) {
      if (i != coord) entries.push_back(c.entry(i));
    }
    out.emplace_back(s.n() - 1, s.d(), std::move(entries));
  }
  return MixedSubdivision::from_cells(s.n() - 1, s.d(), std::move(out));
}

MixedSubdivision mixsd_contraction(const MixedSubdivision& s, int letter) {
  if (s.d() == 1) {
    throw TropmatError(Errc::invalid_parameters,
                       "contraction would empty the alphabet");
  }
  if (letter < 0 || letter >= s.d()) {
    throw TropmatError(Errc::out_of_range, "contraction letter");
  }
  Mask bit = Mask{1} << letter;
  Mask low = bit - 1;
  std::vector<NdType> out;
  for (const NdType& c : s.cells()) {
    if ((c.letters_used() & bit) != 0) continue;
    std::vector<Mask> entries;
    entries.reserve(static_cast<size_t>(s.n()));
    for (int i = 0; i < s.n(); ++i) {
      Mask e = c.entry(i);
      entries.push_back((e & low) | ((e >> 1) & ~low));
    }
    out.emplace_back(s.n(), s.d() - 1, std::move(entries));
  }
  return MixedSubdivision::from_cells(s.n(), s.d() - 1, std::move(out));
}

}  // namespace tropmat
