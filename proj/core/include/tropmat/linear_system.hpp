#pragma once

#include <optional>
#include <vector>

#include "tropmat/rational.hpp"

namespace tropmat {

enum class Rel { eq, le, lt };

/// One affine constraint  coef · x + constant  REL  0  over exact
/// rationals.
struct LinConstraint {
  std::vector<Rational> coef;
  Rational constant;
  Rel rel = Rel::le;
};

/// A system of equalities and (strict or weak) inequalities in a fixed
/// number of variables. The tropical-projective convention x_d = 0 is
/// applied by the callers; this class knows nothing about types.
class LinearSystem {
 public:
  explicit LinearSystem(int num_vars);

  void add(LinConstraint c);

  /// coef · x + constant = 0
  void add_equality(std::vector<Rational> coef, Rational constant);
  /// coef · x + constant <= 0  (or < 0 when strict)
  void add_inequality(std::vector<Rational> coef, Rational constant,
                      bool strict);

  int num_vars() const { return num_vars_; }
  const std::vector<LinConstraint>& constraints() const {
    return constraints_;
  }

 private:
  int num_vars_;
  std::vector<LinConstraint> constraints_;
};

/// Exact Fourier–Motzkin feasibility. Equalities are eliminated by
/// substitution first; a derived inequality is strict iff any parent
/// is strict; proportional constraints are collapsed to the tightest.
bool feasible(const LinearSystem& system);

/// Feasibility plus a witness, reconstructed by back-substitution
/// through the elimination steps (midpoints of the surviving
/// intervals). Returns nullopt when infeasible.
std::optional<std::vector<Rational>> solve(const LinearSystem& system);

/// Evaluates a constraint at a point.
bool satisfies(const LinConstraint& c, const std::vector<Rational>& x);

bool satisfies_all(const LinearSystem& system, const std::vector<Rational>& x);

}  // namespace tropmat
