#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace segre {

// Expression templates are off so `auto` never captures a lazy expression.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or a zero
/// denominator; the result is normalized to lowest terms.
Rational parse_rational(const std::string& text);

}  // namespace segre
