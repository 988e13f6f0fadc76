#include "tropmat/realize.hpp"

#include <algorithm>

#include "tropmat/error.hpp"
#include "tropmat/mixsd.hpp"

namespace tropmat {

WeightMatrix::WeightMatrix(int n, int d,
                           std::vector<std::vector<Rational>> entries)
    : n_(n), d_(d), entries_(std::move(entries)) {
  if (n < 1 || d < 1 || d > kMaxLetters) {
    throw TropmatError(Errc::invalid_parameters, "bad matrix dimensions");
  }
  if (entries_.size() != static_cast<size_t>(n)) {
    throw TropmatError(Errc::length_mismatch, "row count");
  }
  for (const auto& row : entries_) {
    if (row.size() != static_cast<size_t>(d)) {
      throw TropmatError(Errc::length_mismatch, "column count");
    }
  }
}

WeightMatrix WeightMatrix::zero(int n, int d) {
  return WeightMatrix(
      n, d,
      std::vector<std::vector<Rational>>(
          static_cast<size_t>(n),
          std::vector<Rational>(static_cast<size_t>(d), Rational(0))));
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw TropmatError(Errc::invalid_parameters, "empty point");
  }
  const Rational last = coords_.back();
  if (last != 0) {
    for (Rational& c : coords_) c -= last;
  }
}

NdType point_type(const WeightMatrix& w, const ProjectivePoint& x) {
  if (x.d() != w.d()) {
    throw TropmatError(Errc::dimension_mismatch,
                       "point dimension differs from matrix");
  }
  std::vector<Mask> entries;
  entries.reserve(static_cast<size_t>(w.n()));
  for (int i = 0; i < w.n(); ++i) {
    Rational min = w.at(i, 0) + x[0];
    Mask argmin = 1;
    for (int j = 1; j < w.d(); ++j) {
      Rational value = w.at(i, j) + x[j];
      if (value < min) {
        min = std::move(value);
        argmin = Mask{1} << j;
      } else if (value == min) {
        argmin |= Mask{1} << j;
      }
    }
    entries.push_back(argmin);
  }
  return NdType(w.n(), w.d(), std::move(entries));
}

LinearSystem type_system(const WeightMatrix& w, const NdType& a,
                         bool strict) {
  if (a.n() != w.n() || a.d() != w.d()) {
    throw TropmatError(Errc::dimension_mismatch,
                       "type parameters differ from matrix");
  }
  const int d = w.d();
  const int vars = d - 1;  // x_d is pinned to 0
  LinearSystem system(vars);
  for (int i = 0; i < w.n(); ++i) {
    const Mask sector = a.entry(i);
    const int ref = mask_min(sector);
    for (int j : mask_elements(sector)) {
      if (j == ref) continue;
      // a_i,ref + x_ref = a_ij + x_j
      std::vector<Rational> coef(static_cast<size_t>(vars), Rational(0));
      if (ref < vars) coef[static_cast<size_t>(ref)] += 1;
      if (j < vars) coef[static_cast<size_t>(j)] -= 1;
      system.add_equality(std::move(coef), w.at(i, ref) - w.at(i, j));
    }
    for (int l = 0; l < d; ++l) {
      if (mask_test(sector, l)) continue;
      // a_i,ref + x_ref (<|<=) a_il + x_l
      std::vector<Rational> coef(static_cast<size_t>(vars), Rational(0));
      if (ref < vars) coef[static_cast<size_t>(ref)] += 1;
      if (l < vars) coef[static_cast<size_t>(l)] -= 1;
      system.add_inequality(std::move(coef), w.at(i, ref) - w.at(i, l),
                            strict);
    }
  }
  return system;
}

bool type_feasible(const WeightMatrix& w, const NdType& a, bool strict) {
  return feasible(type_system(w, a, strict));
}

std::optional<ProjectivePoint> type_point(const WeightMatrix& w,
                                          const NdType& a, bool strict) {
  auto x = solve(type_system(w, a, strict));
  if (!x) return std::nullopt;
  x->push_back(Rational(0));
  return ProjectivePoint(std::move(*x));
}

namespace {

constexpr long long kMaxCandidates = 10'000'000;
constexpr int kMaxWork = 30;  // n * d

void check_enumeration_caps(int n, int d) {
  if (n * d > kMaxWork) {
    throw TropmatError(Errc::limit_exceeded,
                       "n*d exceeds " + std::to_string(kMaxWork));
  }
  long long total = 1;
  const long long per_coord = (1ll << d) - 1;
  for (int i = 0; i < n; ++i) {
    total *= per_coord;
    if (total > kMaxCandidates) {
      throw TropmatError(Errc::limit_exceeded,
                         "candidate count exceeds " +
                             std::to_string(kMaxCandidates));
    }
  }
}

}  // namespace

TypeCollection realizable_tom(const WeightMatrix& w) {
  const int n = w.n();
  const int d = w.d();
  check_enumeration_caps(n, d);

  // Masks of each cardinality, so candidates stream in increasing
  // total entry size; a weakly infeasible type rules out all its
  // componentwise supersets, which only occur later in this order.
  std::vector<std::vector<Mask>> by_card(static_cast<size_t>(d) + 1);
  for (Mask m = 1; m <= full_mask(d); ++m) {
    by_card[static_cast<size_t>(mask_card(m))].push_back(m);
  }

  std::vector<NdType> members;
  std::vector<std::vector<Mask>> pruned;  // known weakly infeasible

  auto is_pruned = [&pruned, n](const std::vector<Mask>& entries) {
    for (const std::vector<Mask>& bad : pruned) {
      bool superset = true;
      for (int i = 0; i < n; ++i) {
        if ((bad[static_cast<size_t>(i)] &
             ~entries[static_cast<size_t>(i)]) != 0) {
          superset = false;
          break;
        }
      }
      if (superset) return true;
    }
    return false;
  };

  std::vector<Mask> entries(static_cast<size_t>(n));
  auto visit = [&](const std::vector<Mask>& candidate) {
    if (is_pruned(candidate)) return;
    NdType type(n, d, candidate);
    if (!type_feasible(w, type, /*strict=*/false)) {
      pruned.push_back(candidate);
      return;
    }
    if (type_feasible(w, type, /*strict=*/true)) {
      members.push_back(std::move(type));
    }
  };

  // Compositions of the total cardinality into n parts of 1..d.
  auto enumerate = [&](auto&& self, int i, int remaining) -> void {
    if (i == n) {
      visit(entries);
      return;
    }
    int coords_left = n - i - 1;
    for (int card = 1; card <= d; ++card) {
      int rest = remaining - card;
      if (rest < coords_left || rest > coords_left * d) continue;
      for (Mask m : by_card[static_cast<size_t>(card)]) {
        entries[static_cast<size_t>(i)] = m;
        self(self, i + 1, rest);
      }
    }
  };
  for (int total = n; total <= n * d; ++total) {
    enumerate(enumerate, 0, total);
  }

  return TypeCollection(n, d, std::move(members));
}

bool is_generic(const WeightMatrix& w) {
  return is_fine(tom_to_mixsd(realizable_tom(w)));
}

}  // namespace tropmat
