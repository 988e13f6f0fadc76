#include "tropmat/nd_type.hpp"

#include <algorithm>
#include <array>

#include "tropmat/error.hpp"
#include "union_find.hpp"

namespace tropmat {

namespace {

void check_params(int n, int d) {
  if (n < 1) {
    throw TropmatError(Errc::invalid_parameters, "n must be >= 1");
  }
  if (d < 1 || d > kMaxLetters) {
    throw TropmatError(Errc::invalid_parameters,
                       "d must be in [1," + std::to_string(kMaxLetters) + "]");
  }
}

constexpr int kEnumerationCap = 8;  // ordered Bell number 545,835 at d = 8

void check_enumeration_cap(int d) {
  if (d > kEnumerationCap) {
    throw TropmatError(Errc::limit_exceeded,
                       "ordered-partition enumeration capped at d <= " +
                           std::to_string(kEnumerationCap));
  }
}

}  // namespace

NdType::NdType(int n, int d, std::vector<Mask> entries)
    : n_(n), d_(d), entries_(std::move(entries)) {
  check_params(n, d);
  if (entries_.size() != static_cast<size_t>(n)) {
    throw TropmatError(Errc::length_mismatch,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(entries_.size()));
  }
  Mask full = full_mask(d);
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) {
      throw TropmatError(Errc::empty_entry,
                         "entry " + std::to_string(i + 1) + " is empty");
    }
    if ((entries_[i] & ~full) != 0) {
      throw TropmatError(Errc::out_of_range,
                         "entry " + std::to_string(i + 1) +
                             " uses letters beyond " + std::to_string(d));
    }
  }
}

NdType NdType::make(int n, int d,
                    const std::vector<std::vector<int>>& entries) {
  check_params(n, d);
  if (entries.size() != static_cast<size_t>(n)) {
    throw TropmatError(Errc::length_mismatch,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(entries.size()));
  }
  std::vector<Mask> masks;
  masks.reserve(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].empty()) {
      throw TropmatError(Errc::empty_entry,
                         "entry " + std::to_string(i + 1) + " is empty");
    }
    Mask m = 0;
    for (int letter : entries[i]) {
      if (letter < 1 || letter > d) {
        throw TropmatError(Errc::out_of_range,
                           "letter " + std::to_string(letter) + " in entry " +
                               std::to_string(i + 1));
      }
      m |= Mask{1} << (letter - 1);
    }
    masks.push_back(m);
  }
  return NdType(n, d, std::move(masks));
}

NdType NdType::constant(int n, int d, int letter0) {
  check_params(n, d);
  if (letter0 < 0 || letter0 >= d) {
    throw TropmatError(Errc::out_of_range, "letter index out of range");
  }
  return NdType(n, d,
                std::vector<Mask>(static_cast<size_t>(n), Mask{1} << letter0));
}

NdType NdType::parse(std::string_view text, int d) {
  std::string body(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) {
    throw TropmatError(Errc::parse_error, "empty type text");
  }
  std::vector<Mask> entries;
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    size_t end = comma == std::string::npos ? body.size() : comma;
    entries.push_back(parse_subset(body.substr(start, end - start), d));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const int n = static_cast<int>(entries.size());
  return NdType(n, d, std::move(entries));
}

Mask NdType::letters_used() const {
  Mask all = 0;
  for (Mask m : entries_) all |= m;
  return all;
}

bool NdType::is_total() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Mask m) { return mask_card(m) == 1; });
}

std::string NdType::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += format_subset(entries_[i], d_);
  }
  out.push_back(')');
  return out;
}

bool NdType::operator<(const NdType& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (d_ != other.d_) return d_ < other.d_;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != other.entries_[i]) {
      return subset_lex_less(entries_[i], other.entries_[i]);
    }
  }
  return false;
}

std::size_t NdTypeHash::operator()(const NdType& t) const {
  // FNV-1a over the entry masks.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(t.n()));
  mix(static_cast<std::size_t>(t.d()));
  for (Mask m : t.entries()) mix(m);
  return h;
}

OrderedPartition::OrderedPartition(int d, std::vector<Mask> parts)
    : d_(d), parts_(std::move(parts)) {
  check_params(1, d);
  Mask seen = 0;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] == 0) {
      throw TropmatError(Errc::empty_entry,
                         "partition part " + std::to_string(k + 1));
    }
    if ((parts_[k] & ~full_mask(d)) != 0) {
      throw TropmatError(Errc::out_of_range,
                         "partition part " + std::to_string(k + 1));
    }
    if ((parts_[k] & seen) != 0) {
      throw TropmatError(Errc::invalid_parameters,
                         "partition parts overlap");
    }
    seen |= parts_[k];
  }
  if (seen != full_mask(d)) {
    throw TropmatError(Errc::invalid_parameters,
                       "partition does not cover the alphabet");
  }
}

std::string OrderedPartition::to_string() const {
  std::string out;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += format_subset(parts_[k], d_);
  }
  return out;
}

TypeGraph type_graph(const NdType& a) {
  TypeGraph g;
  g.n = a.n();
  g.d = a.d();
  detail::UnionFind uf(g.n + g.d);
  g.forest = true;
  for (int i = 0; i < g.n; ++i) {
    for (int j : mask_elements(a.entry(i))) {
      g.edges.emplace_back(i, j);
      if (!uf.unite(i, g.n + j)) g.forest = false;
    }
  }
  int components = 0;
  Mask used = a.letters_used();
  for (int v = 0; v < g.n + g.d; ++v) {
    if (uf.find(v) == v) ++components;
  }
  g.components = components;
  g.used_components = components - (g.d - mask_card(used));
  return g;
}

NdType refine(const NdType& a, const OrderedPartition& p) {
  if (p.d() != a.d()) {
    throw TropmatError(Errc::parameter_mismatch,
                       "partition alphabet differs from type alphabet");
  }
  std::vector<Mask> out;
  out.reserve(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    Mask cut = 0;
    for (Mask part : p.parts()) {
      cut = a.entry(i) & part;
      if (cut != 0) break;
    }
    out.push_back(cut);
  }
  return NdType(a.n(), a.d(), std::move(out));
}

std::vector<NdType> total_refinements(const NdType& a) {
  check_enumeration_cap(a.d());
  std::array<int, kEnumerationCap> perm{};
  for (int j = 0; j < a.d(); ++j) perm[static_cast<size_t>(j)] = j;
  std::vector<NdType> out;
  // Refining by a permutation keeps, per entry, the earliest letter of
  // the entry; the result is always total, and every total refinement
  // arises this way.
  do {
    std::vector<Mask> entries;
    entries.reserve(static_cast<size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) {
      Mask m = a.entry(i);
      for (int k = 0; k < a.d(); ++k) {
        Mask bit = Mask{1} << perm[static_cast<size_t>(k)];
        if ((m & bit) != 0) {
          entries.push_back(bit);
          break;
        }
      }
    }
    out.emplace_back(a.n(), a.d(), std::move(entries));
  } while (std::next_permutation(perm.begin(), perm.begin() + a.d()));
  return sorted_unique(std::move(out));
}

int arrangement_dim(const NdType& a) { return type_graph(a).components - 1; }

int minkowski_dim(const NdType& a) {
  TypeGraph g = type_graph(a);
  return mask_card(a.letters_used()) - g.used_components;
}

bool is_bounded(const NdType& a) {
  return a.letters_used() == full_mask(a.d());
}

namespace {

void check_same_params(const NdType& a, const NdType& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw TropmatError(Errc::parameter_mismatch,
                       "types have different (n,d)");
  }
}

}  // namespace

MeetResult meet(const NdType& a, const NdType& b) {
  check_same_params(a, b);
  MeetResult result;
  std::vector<Mask> entries;
  entries.reserve(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    Mask m = a.entry(i) & b.entry(i);
    if (m == 0) result.empty_positions.push_back(i);
    entries.push_back(m);
  }
  if (result.empty_positions.empty()) {
    result.type = NdType(a.n(), a.d(), std::move(entries));
  }
  return result;
}

NdType join(const NdType& a, const NdType& b) {
  check_same_params(a, b);
  std::vector<Mask> entries;
  entries.reserve(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    entries.push_back(a.entry(i) | b.entry(i));
  }
  return NdType(a.n(), a.d(), std::move(entries));
}

bool leq(const NdType& a, const NdType& b) {
  check_same_params(a, b);
  for (int i = 0; i < a.n(); ++i) {
    if ((a.entry(i) & ~b.entry(i)) != 0) return false;
  }
  return true;
}

namespace {

void enumerate_partitions(int d, Mask remaining, std::vector<Mask>& prefix,
                          const std::function<void(const OrderedPartition&)>& fn) {
  if (remaining == 0) {
    fn(OrderedPartition(d, prefix));
    return;
  }
  // Every nonempty submask of the remaining letters can be the next part.
  for (Mask part = remaining;; part = (part - 1) & remaining) {
    prefix.push_back(part);
    enumerate_partitions(d, remaining & ~part, prefix, fn);
    prefix.pop_back();
    if (part == (remaining & (~remaining + 1))) break;  // lowest bit last
  }
}

}  // namespace

void for_each_ordered_partition(
    int d, const std::function<void(const OrderedPartition&)>& fn) {
  check_params(1, d);
  check_enumeration_cap(d);
  std::vector<Mask> prefix;
  enumerate_partitions(d, full_mask(d), prefix, fn);
}

std::vector<OrderedPartition> ordered_partitions(int d) {
  std::vector<OrderedPartition> out;
  for_each_ordered_partition(
      d, [&out](const OrderedPartition& p) { out.push_back(p); });
  return out;
}

std::vector<NdType> sorted_unique(std::vector<NdType> types) {
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

}  // namespace tropmat
