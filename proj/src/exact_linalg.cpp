#include "segre/exact_linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace segre {

namespace {

BigInt lcm_of(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

Eigen::Index rank(const ExactMatrix& m) {
  IntegerMatrix scaled(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt row_scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_scale = lcm_of(row_scale, denominator(m(i, j)));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      scaled(i, j) = numerator(m(i, j)) * (row_scale / denominator(m(i, j)));
    }
  }
  return bareiss_rank(scaled);
}

BigInt denominator_lcm(const ExactMatrix& m) {
  BigInt d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      d = lcm_of(d, denominator(m(i, j)));
    }
  }
  return d;
}

IntegerMatrix scale_to_integer(const ExactMatrix& m, const BigInt& scale) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * scale;
      if (denominator(v) != 1) {
        throw std::invalid_argument("scale does not clear every denominator");
      }
      out(i, j) = numerator(v);
    }
  }
  return out;
}

PolynomialZ::PolynomialZ(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolynomialZ polynomial_from_roots(const std::vector<std::pair<BigInt, int>>& roots) {
  std::vector<BigInt> c{BigInt(1)};
  for (const auto& [r, mult] : roots) {
    for (int t = 0; t < mult; ++t) {
      // c(x) * (x - r)
      std::vector<BigInt> next(c.size() + 1, BigInt(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
  }
  return PolynomialZ(std::move(c));
}

std::string format_polynomial(const PolynomialZ& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

PolynomialZ char_poly_integer(const IntegerMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionMismatch("char_poly needs a square matrix");
  const Eigen::Index n = b.rows();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  c[n] = 1;
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = (b * m).eval();
    m.diagonal().array() += c[n - k + 1];
    const BigInt trace = (b * m).trace();
    // Exact: the coefficients of an integer matrix's char poly are integers.
    c[n - k] = -trace / BigInt(k);
  }
  return PolynomialZ(std::move(c));
}

PolynomialZ char_poly(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("char_poly needs a square matrix");
  const BigInt d = denominator_lcm(a);
  return char_poly_integer(scale_to_integer(a, d));
}

namespace {

// Divides `poly` by (q x - p) if p/q is a root. Returns false and leaves
// `poly` untouched otherwise. Gauss's lemma makes every step exact when it
// is a root, so any inexact step proves it is not.
bool try_deflate(std::vector<BigInt>& poly, const BigInt& p, const BigInt& q) {
  const std::size_t n = poly.size() - 1;
  if (n == 0) return false;
  std::vector<BigInt> quotient(n);
  BigInt carry = poly[n];
  for (std::size_t i = n; i >= 1; --i) {
    if (carry % q != 0) return false;
    quotient[i - 1] = carry / q;
    carry = poly[i - 1] + p * quotient[i - 1];
  }
  if (carry != 0) return false;
  poly = std::move(quotient);
  return true;
}

long double log_abs(const BigInt& x) {
  // Top 53 bits plus exponent; avoids overflow for very large integers.
  const BigInt a = abs(x);
  const std::size_t bits = boost::multiprecision::msb(a) + 1;
  if (bits <= 60) return std::log(a.convert_to<long double>());
  const std::size_t drop = bits - 60;
  const BigInt top = a >> drop;
  return std::log(top.convert_to<long double>()) +
         static_cast<long double>(drop) * std::log(2.0L);
}

// Fujiwara: every root satisfies |z| <= 2 max_i |a_{n-i}/a_n|^{1/i}, with the
// constant term halved.
long double fujiwara_bound(const std::vector<BigInt>& a) {
  const std::size_t n = a.size() - 1;
  const long double log_lead = log_abs(a[n]);
  long double best = -std::numeric_limits<long double>::infinity();
  for (std::size_t i = 1; i <= n; ++i) {
    const BigInt& c = a[n - i];
    if (c == 0) continue;
    long double l = log_abs(c) - log_lead;
    if (i == n) l -= std::log(2.0L);
    best = std::max(best, l / static_cast<long double>(i));
  }
  if (!std::isfinite(best)) return 0;
  return 2 * std::exp(best);
}

std::vector<BigInt> positive_divisors_upto(const BigInt& value, const BigInt& limit) {
  // Trial division to sqrt(value); callers keep value small enough.
  std::vector<BigInt> small, large;
  const BigInt v = abs(value);
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    if (d <= limit) small.push_back(d);
    const BigInt other = v / d;
    if (other != d && other <= limit) large.push_back(other);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr long long kCandidateScanLimit = 50'000'000;

}  // namespace

RootSplit rational_roots(const PolynomialZ& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<BigInt> a = p.coefficients();
  std::vector<RationalRoot> roots;

  int zero_multiplicity = 0;
  while (a.size() > 1 && a.front() == 0) {
    a.erase(a.begin());
    ++zero_multiplicity;
  }
  if (zero_multiplicity > 0) roots.push_back({Rational(0), zero_multiplicity});

  BigInt content = 0;
  for (const auto& c : a) content = boost::multiprecision::gcd(content, c);
  if (a.back() < 0) content = -content;
  for (auto& c : a) c /= content;

  if (a.size() > 1) {
    const long double bound = fujiwara_bound(a);
    const BigInt lead = abs(a.back());
    const BigInt constant = abs(a.front());
    if (lead > BigInt(kCandidateScanLimit) * kCandidateScanLimit) {
      throw std::runtime_error("leading coefficient too large for rational root search");
    }
    for (const BigInt& q : positive_divisors_upto(lead, lead)) {
      const long double numerator_limit = std::floor(bound * q.convert_to<long double>()) + 1;
      // Numerators divide the constant term and are bounded by the root
      // bound; take whichever candidate list is cheaper to produce.
      const BigInt root_of_constant = sqrt(constant);
      std::vector<BigInt> numerators;
      if (root_of_constant <= kCandidateScanLimit &&
          root_of_constant.convert_to<long double>() < numerator_limit) {
        const BigInt limit(static_cast<long long>(
            std::min(numerator_limit, static_cast<long double>(
                                          std::numeric_limits<long long>::max() / 2))));
        numerators = positive_divisors_upto(constant, limit);
      } else if (numerator_limit <= static_cast<long double>(kCandidateScanLimit)) {
        const auto limit = static_cast<long long>(numerator_limit);
        for (long long c = 1; c <= limit; ++c) {
          if (constant % c == 0) numerators.emplace_back(c);
        }
      } else {
        throw std::runtime_error("root bound too large for rational root search");
      }
      for (const BigInt& num : numerators) {
        if (boost::multiprecision::gcd(num, q) != 1) continue;
        for (const BigInt& signed_num : {BigInt(-num), num}) {
          int multiplicity = 0;
          while (try_deflate(a, signed_num, q)) ++multiplicity;
          if (multiplicity > 0) {
            roots.push_back({Rational(signed_num, q), multiplicity});
          }
        }
        if (a.size() == 1) break;
      }
      if (a.size() == 1) break;
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  if (a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return RootSplit{std::move(roots), PolynomialZ(std::move(a))};
}

}  // namespace segre
