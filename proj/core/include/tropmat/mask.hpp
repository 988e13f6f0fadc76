#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tropmat {

/// A subset of the letter alphabet {1..d}, stored as a bitmask.
/// Letter j (1-based externally) occupies bit j-1. All internal letter
/// indices are 0-based; conversion happens at the text/JSON boundary.
using Mask = std::uint32_t;

/// Bitmask width cap; see NdType for the enumeration cap (8).
inline constexpr int kMaxLetters = 16;

inline Mask full_mask(int d) { return (Mask{1} << d) - 1; }

inline int mask_card(Mask m) { return std::popcount(m); }

inline bool mask_test(Mask m, int letter0) { return (m >> letter0) & 1u; }

inline int mask_min(Mask m) { return std::countr_zero(m); }

/// Elements of the mask, 0-based, ascending.
std::vector<int> mask_elements(Mask m);

/// Lexicographic order on subsets viewed as sorted ascending element
/// lists ("13" < "2", "1" < "12"). This is the entry order underlying
/// the canonical order on types.
bool subset_lex_less(Mask a, Mask b);

/// Compact text form: "123" for d <= 9, dot-separated "1.12.4" for
/// larger alphabets. Letters print 1-based.
std::string format_subset(Mask m, int d);

/// Inverse of format_subset; throws TropmatError(parse_error /
/// out_of_range / empty_entry) on bad input.
Mask parse_subset(const std::string& text, int d);

}  // namespace tropmat
