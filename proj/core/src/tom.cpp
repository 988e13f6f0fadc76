#include "tropmat/tom.hpp"

#include <algorithm>

#include "tropmat/error.hpp"

namespace tropmat {

TypeCollection::TypeCollection(int n, int d, std::vector<NdType> types)
    : n_(n), d_(d), types_(sorted_unique(std::move(types))) {
  if (n < 1 || d < 1 || d > kMaxLetters) {
    throw TropmatError(Errc::invalid_parameters, "bad collection parameters");
  }
  for (const NdType& t : types_) {
    if (t.n() != n || t.d() != d) {
      throw TropmatError(Errc::parameter_mismatch,
                         "member " + t.to_string() + " has different (n,d)");
    }
  }
}

bool TypeCollection::contains(const NdType& t) const {
  return std::binary_search(types_.begin(), types_.end(), t);
}

BoundaryVerdict check_boundary(const TypeCollection& m) {
  for (int j = 0; j < m.d(); ++j) {
    NdType constant = NdType::constant(m.n(), m.d(), j);
    if (!m.contains(constant)) {
      return {false, std::move(constant)};
    }
  }
  return {true, std::nullopt};
}

ComparabilityVerdict check_comparability(const TypeCollection& m) {
  const auto& types = m.types();
  for (size_t p = 0; p < types.size(); ++p) {
    for (size_t q = p + 1; q < types.size(); ++q) {
      AcyclicityResult r = is_acyclic(comparability_graph(types[p], types[q]));
      if (!r.acyclic) {
        return {false,
                IncomparableEvidence{types[p], types[q], std::move(*r.cycle)}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

/// Enumerates the candidate product {A_k, B_k, A_k ∪ B_k} per
/// coordinate (deduplicated), with coordinate `position` pinned to the
/// union, and collects the members of M among them.
std::vector<NdType> elimination_candidates(const TypeCollection& m,
                                           const NdType& a, const NdType& b,
                                           int position) {
  int n = m.n();
  std::vector<std::vector<Mask>> choices(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Mask u = a.entry(k) | b.entry(k);
    if (k == position) {
      choices[static_cast<size_t>(k)] = {u};
      continue;
    }
    auto& c = choices[static_cast<size_t>(k)];
    c.push_back(a.entry(k));
    if (b.entry(k) != a.entry(k)) c.push_back(b.entry(k));
    if (u != a.entry(k) && u != b.entry(k)) c.push_back(u);
  }

  std::vector<NdType> hits;
  std::vector<Mask> entries(static_cast<size_t>(n));
  auto walk = [&](auto&& self, int k) -> void {
    if (k == n) {
      NdType candidate(n, m.d(), entries);
      if (m.contains(candidate)) hits.push_back(std::move(candidate));
      return;
    }
    for (Mask c : choices[static_cast<size_t>(k)]) {
      entries[static_cast<size_t>(k)] = c;
      self(self, k + 1);
    }
  };
  walk(walk, 0);
  return sorted_unique(std::move(hits));
}

}  // namespace

std::optional<NdType> eliminate_search(const TypeCollection& m,
                                       const NdType& a, const NdType& b,
                                       int position) {
  if (!m.contains(a) || !m.contains(b)) {
    throw TropmatError(Errc::not_member, "A and B must belong to M");
  }
  if (position < 0 || position >= m.n()) {
    throw TropmatError(Errc::out_of_range, "elimination position");
  }
  std::vector<NdType> hits = elimination_candidates(m, a, b, position);
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

EliminationVerdict check_elimination(const TypeCollection& m) {
  const auto& types = m.types();
  for (size_t p = 0; p < types.size(); ++p) {
    for (size_t q = p; q < types.size(); ++q) {
      for (int j = 0; j < m.n(); ++j) {
        if (elimination_candidates(m, types[p], types[q], j).empty()) {
          return {false, EliminationEvidence{types[p], types[q], j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SurroundingVerdict check_surrounding(const TypeCollection& m) {
  SurroundingVerdict verdict{true, std::nullopt};
  for (const NdType& t : m.types()) {
    for_each_ordered_partition(m.d(), [&](const OrderedPartition& p) {
      if (!verdict.pass) return;
      NdType r = refine(t, p);
      if (!m.contains(r)) {
        verdict.pass = false;
        verdict.evidence = SurroundingEvidence{t, p, std::move(r)};
      }
    });
    if (!verdict.pass) break;
  }
  return verdict;
}

AxiomReport check_tom(const TypeCollection& m) {
  AxiomReport report;
  report.boundary = check_boundary(m);
  report.comparability = check_comparability(m);
  report.elimination = check_elimination(m);
  report.surrounding = check_surrounding(m);
  return report;
}

TypeCollection tom_deletion(const TypeCollection& m, int coord) {
  if (m.n() == 1) {
    throw TropmatError(Errc::invalid_parameters,
                       "deletion would leave zero coordinates");
  }
  if (coord < 0 || coord >= m.n()) {
    throw TropmatError(Errc::out_of_range, "deletion coordinate");
  }
  std::vector<NdType> out;
  out.reserve(m.size());
  for (const NdType& t : m.types()) {
    std::vector<Mask> entries;
    entries.reserve(static_cast<size_t>(m.n() - 1));
    for (int i = 0; i < m.n(); ++i) {
      if (i != coord) entries.push_back(t.entry(i));
    }
    out.emplace_back(m.n() - 1, m.d(), std::move(entries));
  }
  return TypeCollection(m.n() - 1, m.d(), std::move(out));
}

TypeCollection tom_contraction(const TypeCollection& m, int letter) {
  if (m.d() == 1) {
    throw TropmatError(Errc::invalid_parameters,
                       "contraction would empty the alphabet");
  }
  if (letter < 0 || letter >= m.d()) {
    throw TropmatError(Errc::out_of_range, "contraction letter");
  }
  Mask bit = Mask{1} << letter;
  Mask low = bit - 1;
  std::vector<NdType> out;
  for (const NdType& t : m.types()) {
    if ((t.letters_used() & bit) != 0) continue;
    std::vector<Mask> entries;
    entries.reserve(static_cast<size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) {
      Mask e = t.entry(i);
      entries.push_back((e & low) | ((e >> 1) & ~low));
    }
    out.emplace_back(m.n(), m.d() - 1, std::move(entries));
  }
  return TypeCollection(m.n(), m.d() - 1, std::move(out));
}

std::map<int, std::vector<NdType>> classify(const TypeCollection& m) {
  std::map<int, std::vector<NdType>> buckets;
  for (const NdType& t : m.types()) {
    buckets[arrangement_dim(t)].push_back(t);
  }
  return buckets;
}

std::vector<NdType> region_topes(const TypeCollection& m) {
  std::vector<NdType> out;
  for (const NdType& t : m.types()) {
    if (arrangement_dim(t) == m.d() - 1) out.push_back(t);
  }
  return out;
}

}  // namespace tropmat
