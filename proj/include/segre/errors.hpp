#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segre {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a rank pattern's nullity growth increases somewhere, i.e. no
/// matrix has that pattern.
class NonMonotoneGrowth : public std::runtime_error {
 public:
  NonMonotoneGrowth(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  /// 1-based k with q_k > q_{k-1}.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InvalidRankPattern : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidJordanSpec : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class IrrationalEigenvalue : public std::runtime_error {
 public:
  explicit IrrationalEigenvalue(int remainder_degree)
      : std::runtime_error(
            "characteristic polynomial has a factor of degree " +
            std::to_string(remainder_degree) +
            " without rational roots; only matrices with rational "
            "eigenvalues can be analyzed"),
        remainder_degree_(remainder_degree) {}

  int remainder_degree() const noexcept { return remainder_degree_; }

 private:
  int remainder_degree_;
};

/// An exact cross-check failed. Indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace segre

namespace segre {

class MatrixFormatError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace segre
