#include "tropmat/mask.hpp"

#include <charconv>

#include "tropmat/error.hpp"

namespace tropmat {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(mask_card(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool subset_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  // Equal prefix: the shorter list comes first.
  return a == 0 && b != 0;
}

std::string format_subset(Mask m, int d) {
  std::string out;
  bool dotted = d > 9;
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first && dotted) out.push_back('.');
    out += std::to_string(e + 1);
    first = false;
  }
  return out;
}

namespace {

int parse_letter(std::string_view text, int d) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw TropmatError(Errc::parse_error,
                       "bad letter '" + std::string(text) + "'");
  }
  if (value < 1 || value > d) {
    throw TropmatError(Errc::out_of_range,
                       "letter " + std::to_string(value) +
                           " outside [1," + std::to_string(d) + "]");
  }
  return value - 1;
}

}  // namespace

Mask parse_subset(const std::string& text, int d) {
  if (d < 1 || d > kMaxLetters) {
    throw TropmatError(Errc::out_of_range,
                       "alphabet size " + std::to_string(d));
  }
  if (text.empty()) {
    throw TropmatError(Errc::empty_entry, "empty subset text");
  }
  Mask m = 0;
  if (d > 9) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t dot = text.find('.', start);
      size_t end = dot == std::string::npos ? text.size() : dot;
      if (end == start) {
        throw TropmatError(Errc::parse_error, "empty element in '" + text + "'");
      }
      m |= Mask{1} << parse_letter({text.data() + start, end - start}, d);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      m |= Mask{1} << parse_letter({&c, 1}, d);
    }
  }
  return m;
}

}  // namespace tropmat
