#include "tropmat/linear_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tropmat/error.hpp"

namespace tropmat {

LinearSystem::LinearSystem(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) {
    throw TropmatError(Errc::invalid_parameters, "negative variable count");
  }
}

void LinearSystem::add(LinConstraint c) {
  if (c.coef.size() != static_cast<size_t>(num_vars_)) {
    throw TropmatError(Errc::length_mismatch, "constraint width");
  }
  constraints_.push_back(std::move(c));
}

void LinearSystem::add_equality(std::vector<Rational> coef,
                                Rational constant) {
  add({std::move(coef), std::move(constant), Rel::eq});
}

void LinearSystem::add_inequality(std::vector<Rational> coef,
                                  Rational constant, bool strict) {
  add({std::move(coef), std::move(constant), strict ? Rel::lt : Rel::le});
}

bool satisfies(const LinConstraint& c, const std::vector<Rational>& x) {
  Rational value = c.constant;
  for (size_t k = 0; k < c.coef.size(); ++k) {
    if (c.coef[k] != 0) value += c.coef[k] * x[k];
  }
  switch (c.rel) {
    case Rel::eq: return value == 0;
    case Rel::le: return value <= 0;
    case Rel::lt: return value < 0;
  }
  return false;
}

bool satisfies_all(const LinearSystem& system,
                   const std::vector<Rational>& x) {
  return std::all_of(system.constraints().begin(),
                     system.constraints().end(),
                     [&x](const LinConstraint& c) { return satisfies(c, x); });
}

namespace {

Rel combine_rel(Rel a, Rel b) {
  return (a == Rel::lt || b == Rel::lt) ? Rel::lt : Rel::le;
}

/// Fourier–Motzkin machine. Keeps full-width coefficient vectors; an
/// eliminated variable simply has a zero column afterwards.
class FmSolver {
 public:
  explicit FmSolver(const LinearSystem& system)
      : nvars_(system.num_vars()), work_(system.constraints()) {}

  bool run() {
    if (!substitute_equalities()) return false;
    while (true) {
      if (!normalize()) return false;
      int v = pick_variable();
      if (v < 0) return true;
      eliminate(v);
    }
  }

  /// Valid only after run() returned true.
  std::vector<Rational> reconstruct() const {
    std::vector<Rational> x(static_cast<size_t>(nvars_), Rational(0));
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
      x[static_cast<size_t>(it->var)] = pick_value(*it, x);
    }
    for (auto it = subs_.rbegin(); it != subs_.rend(); ++it) {
      Rational value = it->constant;
      for (int k = 0; k < nvars_; ++k) {
        if (it->coef[static_cast<size_t>(k)] != 0) {
          value += it->coef[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
        }
      }
      x[static_cast<size_t>(it->var)] = value;
    }
    return x;
  }

 private:
  struct Substitution {
    int var;
    std::vector<Rational> coef;  // expression for var over the others
    Rational constant;
  };

  struct Step {
    int var;
    std::vector<LinConstraint> lowers;  // coef[var] < 0
    std::vector<LinConstraint> uppers;  // coef[var] > 0
  };

  bool substitute_equalities() {
    for (size_t c = 0; c < work_.size(); ++c) {
      if (work_[c].rel != Rel::eq) continue;
      int pivot = -1;
      for (int k = 0; k < nvars_; ++k) {
        if (work_[c].coef[static_cast<size_t>(k)] != 0) {
          pivot = k;
          break;
        }
      }
      if (pivot < 0) {
        if (work_[c].constant != 0) return false;
        work_.erase(work_.begin() + static_cast<ptrdiff_t>(c));
        --c;
        continue;
      }
      Substitution sub{pivot,
                       std::vector<Rational>(static_cast<size_t>(nvars_),
                                             Rational(0)),
                       Rational(0)};
      const Rational lead = work_[c].coef[static_cast<size_t>(pivot)];
      for (int k = 0; k < nvars_; ++k) {
        if (k != pivot) {
          sub.coef[static_cast<size_t>(k)] =
              -work_[c].coef[static_cast<size_t>(k)] / lead;
        }
      }
      sub.constant = -work_[c].constant / lead;
      work_.erase(work_.begin() + static_cast<ptrdiff_t>(c));
      --c;
      for (LinConstraint& other : work_) {
        Rational& p = other.coef[static_cast<size_t>(pivot)];
        if (p == 0) continue;
        for (int k = 0; k < nvars_; ++k) {
          if (k != pivot && sub.coef[static_cast<size_t>(k)] != 0) {
            other.coef[static_cast<size_t>(k)] +=
                p * sub.coef[static_cast<size_t>(k)];
          }
        }
        other.constant += p * sub.constant;
        p = 0;
      }
      subs_.push_back(std::move(sub));
    }
    return true;
  }

  /// Drops satisfied constant rows, detects violated ones, and keeps
  /// only the tightest of any proportional family (scale to a +/-1
  /// leading coefficient; larger constant is tighter, strict beats
  /// weak on ties).
  bool normalize() {
    std::map<std::vector<Rational>, std::pair<Rational, Rel>> best;
    for (LinConstraint& c : work_) {
      int lead = -1;
      for (int k = 0; k < nvars_; ++k) {
        if (c.coef[static_cast<size_t>(k)] != 0) {
          lead = k;
          break;
        }
      }
      if (lead < 0) {
        if (c.constant > 0 || (c.constant == 0 && c.rel == Rel::lt)) {
          return false;
        }
        continue;
      }
      Rational scale = abs(c.coef[static_cast<size_t>(lead)]);
      std::vector<Rational> key(static_cast<size_t>(nvars_), Rational(0));
      for (int k = lead; k < nvars_; ++k) {
        key[static_cast<size_t>(k)] = c.coef[static_cast<size_t>(k)] / scale;
      }
      Rational constant = c.constant / scale;
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), std::pair{std::move(constant), c.rel});
      } else if (constant > it->second.first ||
                 (constant == it->second.first && c.rel == Rel::lt)) {
        it->second = {std::move(constant), c.rel};
      }
    }
    work_.clear();
    for (auto& [key, value] : best) {
      work_.push_back({key, value.first, value.second});
    }
    return true;
  }

  /// Smallest lower-times-upper product; -1 when no variable remains.
  int pick_variable() const {
    int best = -1;
    long best_cost = 0;
    for (int k = 0; k < nvars_; ++k) {
      long pos = 0;
      long neg = 0;
      bool present = false;
      for (const LinConstraint& c : work_) {
        const Rational& coef = c.coef[static_cast<size_t>(k)];
        if (coef > 0) ++pos, present = true;
        if (coef < 0) ++neg, present = true;
      }
      if (!present) continue;
      long cost = pos * neg;
      if (best < 0 || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    return best;
  }

  void eliminate(int v) {
    Step step{v, {}, {}};
    std::vector<LinConstraint> rest;
    for (LinConstraint& c : work_) {
      const Rational& coef = c.coef[static_cast<size_t>(v)];
      if (coef > 0) {
        step.uppers.push_back(std::move(c));
      } else if (coef < 0) {
        step.lowers.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    for (const LinConstraint& lo : step.lowers) {
      const Rational lo_v = lo.coef[static_cast<size_t>(v)];
      for (const LinConstraint& up : step.uppers) {
        const Rational up_v = up.coef[static_cast<size_t>(v)];
        LinConstraint merged;
        merged.coef.assign(static_cast<size_t>(nvars_), Rational(0));
        // up_v * lo - lo_v * up, both multipliers positive.
        for (int k = 0; k < nvars_; ++k) {
          if (k == v) continue;
          merged.coef[static_cast<size_t>(k)] =
              up_v * lo.coef[static_cast<size_t>(k)] -
              lo_v * up.coef[static_cast<size_t>(k)];
        }
        merged.constant = up_v * lo.constant - lo_v * up.constant;
        merged.rel = combine_rel(lo.rel, up.rel);
        rest.push_back(std::move(merged));
      }
    }
    work_ = std::move(rest);
    steps_.push_back(std::move(step));
  }

  /// Value for an eliminated variable given the later assignments:
  /// midpoint of the surviving interval, or one unit inside the sole
  /// bound.
  Rational pick_value(const Step& step, const std::vector<Rational>& x) const {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    bool lower_strict = false;
    bool upper_strict = false;
    for (const LinConstraint& lo : step.lowers) {
      Rational rhs = lo.constant;
      for (int k = 0; k < nvars_; ++k) {
        if (k != step.var && lo.coef[static_cast<size_t>(k)] != 0) {
          rhs += lo.coef[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
        }
      }
      Rational bound = rhs / -lo.coef[static_cast<size_t>(step.var)];
      if (!lower || bound > *lower) {
        lower = bound;
        lower_strict = lo.rel == Rel::lt;
      } else if (bound == *lower && lo.rel == Rel::lt) {
        lower_strict = true;
      }
    }
    for (const LinConstraint& up : step.uppers) {
      Rational rhs = up.constant;
      for (int k = 0; k < nvars_; ++k) {
        if (k != step.var && up.coef[static_cast<size_t>(k)] != 0) {
          rhs += up.coef[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
        }
      }
      Rational bound = -rhs / up.coef[static_cast<size_t>(step.var)];
      if (!upper || bound < *upper) {
        upper = bound;
        upper_strict = up.rel == Rel::lt;
      } else if (bound == *upper && up.rel == Rel::lt) {
        upper_strict = true;
      }
    }
    if (lower && upper) {
      if (*lower == *upper) {
        if (lower_strict || upper_strict) {
          throw std::logic_error("empty interval after feasible elimination");
        }
        return *lower;
      }
      return (*lower + *upper) / 2;
    }
    if (lower) return *lower + 1;
    if (upper) return *upper - 1;
    return Rational(0);
  }

  int nvars_;
  std::vector<LinConstraint> work_;
  std::vector<Substitution> subs_;
  std::vector<Step> steps_;
};

}  // namespace

bool feasible(const LinearSystem& system) {
  FmSolver solver(system);
  return solver.run();
}

std::optional<std::vector<Rational>> solve(const LinearSystem& system) {
  FmSolver solver(system);
  if (!solver.run()) return std::nullopt;
  std::vector<Rational> x = solver.reconstruct();
  if (!satisfies_all(system, x)) {
    throw std::logic_error("reconstructed point violates the system");
  }
  return x;
}

}  // namespace tropmat
