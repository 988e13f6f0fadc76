// Test-side oracles, kept independent of the library code paths they
// check: partition enumeration by surjection odometer, affine rank by
// Gaussian elimination, polygon area by shoelace, feasibility by grid
// search.
#pragma once

#include <vector>

#include "tropmat/mask.hpp"
#include "tropmat/mixsd.hpp"
#include "tropmat/nd_type.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/realize.hpp"

namespace oracles {

/// Every ordered partition of {1..d} as a part list, enumerated as
/// surjections [d] -> [k] for k = 1..d via a plain odometer.
inline std::vector<std::vector<tropmat::Mask>> ordered_partitions(int d) {
  std::vector<std::vector<tropmat::Mask>> out;
  for (int k = 1; k <= d; ++k) {
    std::vector<int> f(static_cast<size_t>(d), 0);
    while (true) {
      std::vector<tropmat::Mask> parts(static_cast<size_t>(k), 0);
      for (int e = 0; e < d; ++e) {
        parts[static_cast<size_t>(f[static_cast<size_t>(e)])] |=
            tropmat::Mask{1} << e;
      }
      bool surjective = true;
      for (tropmat::Mask p : parts) {
        if (p == 0) surjective = false;
      }
      if (surjective) out.push_back(parts);

      int pos = 0;
      while (pos < d && f[static_cast<size_t>(pos)] == k - 1) {
        f[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == d) break;
      ++f[static_cast<size_t>(pos)];
    }
  }
  return out;
}

/// All (2^d - 1)^n types with parameters (n,d), canonical order.
inline std::vector<tropmat::NdType> all_types(int n, int d) {
  std::vector<tropmat::NdType> out;
  std::vector<tropmat::Mask> entries(static_cast<size_t>(n), 1);
  const tropmat::Mask full = tropmat::full_mask(d);
  while (true) {
    out.emplace_back(n, d, entries);
    int pos = 0;
    while (pos < n && entries[static_cast<size_t>(pos)] == full) {
      entries[static_cast<size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == n) break;
    ++entries[static_cast<size_t>(pos)];
  }
  return tropmat::sorted_unique(std::move(out));
}

/// Rank of the difference vectors of a point set, exact.
inline int affine_rank(const std::vector<tropmat::LatticePoint>& points) {
  if (points.size() <= 1) return 0;
  const size_t dim = points[0].x.size();
  std::vector<std::vector<tropmat::Rational>> rows;
  for (size_t p = 1; p < points.size(); ++p) {
    std::vector<tropmat::Rational> row(dim);
    for (size_t c = 0; c < dim; ++c) {
      row[c] = tropmat::Rational(points[p].x[c] - points[0].x[c]);
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (size_t col = 0; col < dim; ++col) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
      tropmat::Rational factor =
          rows[r][col] / rows[static_cast<size_t>(rank)][col];
      for (size_t c = col; c < dim; ++c) {
        rows[r][c] -= factor * rows[static_cast<size_t>(rank)][c];
      }
    }
    ++rank;
    if (static_cast<size_t>(rank) == rows.size()) break;
  }
  return rank;
}

/// Twice the area of a convex polygon given by its vertices in
/// arbitrary order (sorted around the centroid internally), exact.
inline long long polygon_area_doubled(
    std::vector<std::pair<long long, long long>> pts) {
  // Sort counterclockwise around the lowest-leftmost point by cross
  // product, avoiding floating point.
  std::sort(pts.begin(), pts.end());
  auto base = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&base](const auto& a, const auto& b) {
    long long cross = (a.first - base.first) * (b.second - base.second) -
                      (a.second - base.second) * (b.first - base.first);
    if (cross != 0) return cross > 0;
    auto da = (a.first - base.first) * (a.first - base.first) +
              (a.second - base.second) * (a.second - base.second);
    auto db = (b.first - base.first) * (b.first - base.first) +
              (b.second - base.second) * (b.second - base.second);
    return da < db;
  });
  long long doubled = 0;
  for (size_t k = 0; k < pts.size(); ++k) {
    const auto& [x1, y1] = pts[k];
    const auto& [x2, y2] = pts[(k + 1) % pts.size()];
    doubled += x1 * y2 - x2 * y1;
  }
  return doubled < 0 ? -doubled : doubled;
}

/// Grid search for the weak sector system of A: a witness with bounded
/// denominator exists whenever the system is feasible, because all
/// constraints are differences with small constants.
inline bool grid_feasible(const tropmat::WeightMatrix& w,
                          const tropmat::NdType& a, long long box_num,
                          long long denom) {
  const int vars = w.d() - 1;
  std::vector<long long> grid(static_cast<size_t>(vars), -box_num * denom);
  const long long lo = -box_num * denom;
  const long long hi = box_num * denom;
  while (true) {
    std::vector<tropmat::Rational> x;
    for (long long g : grid) x.emplace_back(g, denom);
    x.emplace_back(0);
    bool ok = true;
    for (int i = 0; i < w.n() && ok; ++i) {
      const tropmat::Mask sector = a.entry(i);
      const int ref = tropmat::mask_min(sector);
      const tropmat::Rational base =
          w.at(i, ref) + x[static_cast<size_t>(ref)];
      for (int j = 0; j < w.d() && ok; ++j) {
        tropmat::Rational value = w.at(i, j) + x[static_cast<size_t>(j)];
        if (tropmat::mask_test(sector, j)) {
          ok = value == base;
        } else {
          ok = value >= base;
        }
      }
    }
    if (ok) return true;

    int pos = 0;
    while (pos < vars && grid[static_cast<size_t>(pos)] == hi) {
      grid[static_cast<size_t>(pos)] = lo;
      ++pos;
    }
    if (pos == vars) return false;
    ++grid[static_cast<size_t>(pos)];
  }
}

}  // namespace oracles
