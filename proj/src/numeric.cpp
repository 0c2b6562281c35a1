#include "segre/numeric.hpp"

#include "segre/errors.hpp"

#include <cctype>

namespace segre {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

BigInt parse_integer_digits(const std::string& text, std::size_t begin,
                            std::size_t end) {
  if (begin == end) throw ParseError("expected digits", begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected a digit", i);
    }
  }
  return BigInt(text.substr(begin, end - begin));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t slash = text.find('/', pos);
  BigInt num = parse_integer_digits(text, pos, slash == std::string::npos ? text.size() : slash);
  BigInt den = 1;
  if (slash != std::string::npos) {
    den = parse_integer_digits(text, slash + 1, text.size());
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace segre
