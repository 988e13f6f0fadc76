#pragma once

#include <optional>
#include <vector>

#include "tropmat/linear_system.hpp"
#include "tropmat/nd_type.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// Min-plus coefficients of n tropical hyperplanes in TP^{d-1}: row i
/// holds the coefficients a_{i1..id} of hyperplane i. Exact rationals
/// throughout.
class WeightMatrix {
 public:
  WeightMatrix(int n, int d, std::vector<std::vector<Rational>> entries);

  static WeightMatrix zero(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  const Rational& at(int i, int j) const {
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const std::vector<std::vector<Rational>>& entries() const {
    return entries_;
  }

 private:
  int n_;
  int d_;
  std::vector<std::vector<Rational>> entries_;
};

/// A point of tropical projective space TP^{d-1}, normalized so the
/// last coordinate is exactly 0.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords);

  int d() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int j) const {
    return coords_[static_cast<size_t>(j)];
  }
  const std::vector<Rational>& coords() const { return coords_; }

 private:
  std::vector<Rational> coords_;
};

/// The type of a point: A_i = argmin_j (a_ij + x_j), computed exactly.
NdType point_type(const WeightMatrix& w, const ProjectivePoint& x);

/// The sector-membership system of A over x_1..x_{d-1} (x_d pinned to
/// 0): per hyperplane, equality on the argmin set and strict (or weak)
/// dominance over the rest.
LinearSystem type_system(const WeightMatrix& w, const NdType& a, bool strict);

/// Decides existence of a point whose type is A (strict) or that
/// weakly attains A's memberships (weak), via exact Fourier–Motzkin.
bool type_feasible(const WeightMatrix& w, const NdType& a, bool strict);

/// A witness point for type_feasible, when one exists.
std::optional<ProjectivePoint> type_point(const WeightMatrix& w,
                                          const NdType& a, bool strict);

/// All types realized by the arrangement of w: candidates enumerated
/// by increasing total entry size with antitone weak-infeasibility
/// pruning. Caps: n*d <= 30 and (2^d-1)^n <= 10^7 (LimitExceeded).
TypeCollection realizable_tom(const WeightMatrix& w);

/// True iff the arrangement is in general position, i.e. the mixed
/// subdivision induced by its types is fine.
bool is_generic(const WeightMatrix& w);

}  // namespace tropmat
