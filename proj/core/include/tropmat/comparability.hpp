#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropmat/nd_type.hpp"

namespace tropmat {

/// Mixed multigraph on the letter nodes {1..d}: undirected edges keyed
/// by unordered pair, directed edges by ordered pair, both with
/// multiplicities. No loops.
struct MixedMultigraph {
  int d = 0;
  std::map<std::pair<int, int>, int> undirected;  // key (min,max), 0-based
  std::map<std::pair<int, int>, int> directed;    // key (from,to)

  int undirected_multiplicity(int a, int b) const;
  int directed_multiplicity(int from, int to) const;
  bool has_undirected(int a, int b) const;
  bool has_directed(int from, int to) const;

  /// Graphviz export for debugging ("a -- b" / "a -> b", 1-based).
  /// Not a stability contract.
  std::string to_dot() const;
};

struct CycleStep {
  int from = 0;
  int to = 0;
  bool directed = false;

  bool operator==(const CycleStep&) const = default;
};

/// A closed walk with at least one directed edge, all directed edges
/// oriented forward along the walk.
struct CycleWitness {
  std::vector<CycleStep> steps;

  std::string to_string() const;
};

/// Replays a witness against the stored edges: closed, consecutive,
/// at least one directed edge, every step present in the graph.
bool witness_replays(const MixedMultigraph& g, const CycleWitness& w);

/// The comparability graph of A and B: per coordinate i, one edge for
/// every ordered pair (j,k) in A_i x B_i with j != k, undirected when
/// both letters lie in A_i ∩ B_i and directed j -> k otherwise.
MixedMultigraph comparability_graph(const NdType& a, const NdType& b);

struct AcyclicityResult {
  bool acyclic = false;
  std::optional<CycleWitness> cycle;
};

/// Contracts undirected components (union-find); the graph has a
/// directed cycle iff a directed edge stays inside one component or
/// the contracted digraph has one. Failure carries an explicit walk.
AcyclicityResult is_acyclic(const MixedMultigraph& g);

struct RefinementWitness {
  std::optional<OrderedPartition> partition;
  std::optional<CycleWitness> cycle;

  bool found() const { return partition.has_value(); }
};

/// For A ⊆ B (componentwise; NotSubset otherwise): returns P with
/// refine(B,P) = A when the comparability graph is acyclic, built from
/// the contracted components in Kahn order with
/// smallest-minimum-element tie-breaking; letters absent from B form a
/// final extra part. On a cycle, returns the witness instead.
RefinementWitness refinement_witness(const NdType& a, const NdType& b);

}  // namespace tropmat
