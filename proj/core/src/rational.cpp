#include "tropmat/rational.hpp"

#include <sstream>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw TropmatError(Errc::parse_error, "empty number");
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw TropmatError(Errc::parse_error, "bare sign '" + text + "'");
  }
  for (size_t k = start; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw TropmatError(Errc::parse_error, "bad number '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw TropmatError(Errc::parse_error, "zero denominator in '" + text + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;  // cpp_rational streams as p/q in lowest terms
  return out.str();
}

}  // namespace tropmat
