#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropmat/mask.hpp"

namespace tropmat {

/// An (n,d)-type: an n-tuple of nonempty subsets of {1..d}. The
/// universal combinatorial object of this library — it encodes a
/// tropical covector, a Minkowski cell, and a cell of a hyperplane
/// arrangement all at once. Immutable after construction.
class NdType {
 public:
  /// Entries are bitmasks; throws on empty or out-of-range entries.
  NdType(int n, int d, std::vector<Mask> entries);

  /// Builds from 1-based element lists, with full error reporting:
  /// EmptyEntry, OutOfRange, LengthMismatch.
  static NdType make(int n, int d,
                     const std::vector<std::vector<int>>& entries);

  /// The constant type (j,j,...,j); letter0 is 0-based.
  static NdType constant(int n, int d, int letter0);

  /// Parses the compact text form, e.g. "(123,16,34,456,56)".
  /// Surrounding parentheses are optional; d selects the entry grammar
  /// (digit string vs dot-separated). n is inferred from the text.
  static NdType parse(std::string_view text, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  Mask entry(int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<Mask>& entries() const { return entries_; }

  /// Union of all entries.
  Mask letters_used() const;

  /// True iff every entry is a singleton.
  bool is_total() const;

  std::string to_string() const;

  bool operator==(const NdType& other) const = default;

  /// Canonical order: (n,d), then entrywise subset_lex_less. All
  /// deterministic set output in the library is sorted by this order.
  bool operator<(const NdType& other) const;

 private:
  int n_;
  int d_;
  std::vector<Mask> entries_;
};

struct NdTypeHash {
  std::size_t operator()(const NdType& t) const;
};

/// An ordered partition P = (P_1,...,P_k) of {1..d}: disjoint nonempty
/// parts covering the whole alphabet, order significant.
class OrderedPartition {
 public:
  OrderedPartition(int d, std::vector<Mask> parts);

  int d() const { return d_; }
  const std::vector<Mask>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }

  /// Paper-compact form "123,4,56" (dot-separated entries for d > 9).
  std::string to_string() const;

  bool operator==(const OrderedPartition& other) const = default;

 private:
  int d_;
  std::vector<Mask> parts_;
};

/// The bipartite type graph K_A on nodes N_1..N_n, D_1..D_d with an
/// edge (N_i, D_j) for every j in A_i, plus the derived component
/// counts that drive both dimension notions.
struct TypeGraph {
  int n = 0;
  int d = 0;
  std::vector<std::pair<int, int>> edges;  // (coordinate, letter), 0-based
  int components = 0;       // counting isolated letter nodes
  int used_components = 0;  // ignoring isolated letter nodes
  bool forest = false;
};

TypeGraph type_graph(const NdType& a);

/// The refinement A|_P: entry i becomes A_i ∩ P_m for the smallest m
/// with nonempty intersection.
NdType refine(const NdType& a, const OrderedPartition& p);

/// All total refinements of A, canonically sorted and deduplicated.
/// Enumerates the d! singleton partitions, which reach every total
/// refinement. Throws LimitExceeded for d > 8.
std::vector<NdType> total_refinements(const NdType& a);

/// Number of connected components of K_A minus one. Range 0..d-1;
/// 0 means a vertex, d-1 a tope.
int arrangement_dim(const NdType& a);

/// Dimension of the Minkowski cell of A: letters used minus components
/// of K_A that contain a coordinate node. Complements arrangement_dim
/// to d-1.
int minkowski_dim(const NdType& a);

/// True iff every letter of {1..d} appears somewhere in A.
bool is_bounded(const NdType& a);

/// Componentwise intersection. Positions that intersect emptily are
/// reported as data, not as an error.
struct MeetResult {
  std::optional<NdType> type;
  std::vector<int> empty_positions;  // 0-based coordinates

  bool ok() const { return type.has_value(); }
};

MeetResult meet(const NdType& a, const NdType& b);
NdType join(const NdType& a, const NdType& b);

/// Componentwise subset test: a_i ⊆ b_i for all i.
bool leq(const NdType& a, const NdType& b);

/// Enumerates every ordered partition of {1..d} (ordered Bell many;
/// 545,835 at the cap d = 8). Throws LimitExceeded beyond.
void for_each_ordered_partition(
    int d, const std::function<void(const OrderedPartition&)>& fn);

std::vector<OrderedPartition> ordered_partitions(int d);

/// Sorts canonically and removes duplicates.
std::vector<NdType> sorted_unique(std::vector<NdType> types);

}  // namespace tropmat
