#pragma once

#include "segre/errors.hpp"
#include "segre/numeric.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace segre {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<BigInt>;

/// Rank of an integer-valued matrix by fraction-free (Bareiss) elimination.
/// Pivots are the first nonzero entry of each column, scanning rows top-down.
/// Every division is exact, so any integral Scalar works, including
/// fixed-width types when the minors fit.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous_pivot(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < rows && m(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Scalar pivot = m(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        // Sylvester's identity guarantees the division is exact.
        m(i, j) = (pivot * m(i, j) - factor * m(rank, j)) / previous_pivot;
      }
      m(i, col) = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

/// Exact rank over the rationals. Each row is scaled by the LCM of its
/// denominators and the resulting integer matrix goes through bareiss_rank.
Eigen::Index rank(const ExactMatrix& m);

/// a * b. Throws DimensionMismatch when the inner dimensions differ.
template <typename DerivedA, typename DerivedB>
auto mat_mul(const Eigen::MatrixBase<DerivedA>& a,
             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  typename DerivedA::PlainObject out = a * b;
  return out;
}

/// a^k by repeated squaring; a^0 is the identity.
template <typename Derived>
auto mat_pow(const Eigen::MatrixBase<Derived>& a, unsigned k) {
  if (a.rows() != a.cols()) throw DimensionMismatch("mat_pow needs a square matrix");
  using Plain = typename Derived::PlainObject;
  Plain result = Plain::Identity(a.rows(), a.cols());
  Plain base = a;
  while (k > 0) {
    if (k & 1u) result = (result * base).eval();
    k >>= 1u;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// a - lambda I.
template <typename Derived>
auto shift(const Eigen::MatrixBase<Derived>& a,
           const typename Derived::Scalar& lambda) {
  if (a.rows() != a.cols()) throw DimensionMismatch("shift needs a square matrix");
  typename Derived::PlainObject out = a;
  out.diagonal().array() -= lambda;
  return out;
}

/// LCM of all entry denominators (1 for an integer matrix).
BigInt denominator_lcm(const ExactMatrix& m);

/// scale * m as an integer matrix, scale = denominator_lcm(m).
IntegerMatrix scale_to_integer(const ExactMatrix& m, const BigInt& scale);

/// Dense polynomial with integer coefficients, lowest degree first. Trailing
/// zero coefficients are trimmed; the zero polynomial has no coefficients.
class PolynomialZ {
 public:
  PolynomialZ() = default;
  explicit PolynomialZ(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  bool operator==(const PolynomialZ&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Multiplies out prod (x - r_i)^{m_i} for integer roots.
PolynomialZ polynomial_from_roots(const std::vector<std::pair<BigInt, int>>& roots);

std::string format_polynomial(const PolynomialZ& p);

/// Characteristic polynomial det(xI - B) of an integer matrix by the
/// Faddeev-LeVerrier recurrence. The divisions by k are exact in Z.
PolynomialZ char_poly_integer(const IntegerMatrix& b);

/// det(xI - dA) where d = denominator_lcm(a); for an integer matrix this is
/// the ordinary characteristic polynomial. The eigenvalues of `a` are the
/// roots of the result divided by d.
PolynomialZ char_poly(const ExactMatrix& a);

/// p(M) by Horner's rule.
template <typename Derived>
auto evaluate_at_matrix(const PolynomialZ& p,
                        const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Plain = typename Derived::PlainObject;
  Plain acc = Plain::Zero(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * m).eval();
    acc.diagonal().array() += Scalar(*it);
  }
  return acc;
}

struct RationalRoot {
  Rational value;
  int multiplicity;

  bool operator==(const RationalRoot&) const = default;
};

struct RootSplit {
  /// Ascending by value.
  std::vector<RationalRoot> roots;
  /// The factor left after deflating every rational root, normalized to a
  /// positive leading coefficient.
  PolynomialZ remainder;

  int remainder_degree() const noexcept { return remainder.degree(); }
};

/// Rational roots of a nonzero polynomial with multiplicities, by
/// rational-root-theorem candidates and synthetic division. Candidate
/// numerators are scanned only up to the Fujiwara root bound.
RootSplit rational_roots(const PolynomialZ& p);

}  // namespace segre
