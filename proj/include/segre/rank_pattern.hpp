#pragma once

#include "segre/partitions.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace segre {

/// rank((A - lambda I)^k) for k = 0..m, where m is the first index after
/// which the rank no longer changes.
///
/// Construction checks the shape only: r_0 = n, every r_k <= n, and the
/// sequence never increases. A repeated value marks stabilization; the
/// repeat and anything after it is dropped, so the stored sequence is
/// strictly decreasing. Whether the pattern belongs to some matrix is
/// decided later by nullity_growth.
class RankPattern {
 public:
  RankPattern(int dimension, std::vector<int> ranks);

  int dimension() const noexcept { return dimension_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  /// m, the number of steps before stabilization.
  std::size_t steps() const noexcept { return ranks_.size() - 1; }
  /// r_m.
  int stable_rank() const noexcept { return ranks_.back(); }
  /// n - r_m.
  int algebraic_multiplicity() const noexcept {
    return dimension_ - ranks_.back();
  }

  bool operator==(const RankPattern&) const = default;

 private:
  int dimension_;
  std::vector<int> ranks_;
};

/// The Weyr characteristic q_k = r_{k-1} - r_k. Always non-increasing.
class NullityGrowth {
 public:
  /// Throws NonMonotoneGrowth if some q_k > q_{k-1}, and
  /// std::invalid_argument on a non-positive entry.
  explicit NullityGrowth(std::vector<int> q);

  const std::vector<int>& values() const noexcept { return q_; }
  /// Sum of q, the algebraic multiplicity.
  int total() const noexcept;
  /// q_1, the geometric multiplicity (0 for an empty growth).
  int first() const noexcept { return q_.empty() ? 0 : q_.front(); }

 private:
  std::vector<int> q_;
};

NullityGrowth nullity_growth(const RankPattern& rp);

/// Jordan block sizes for the eigenvalue: the conjugate of the nullity
/// growth. An empty pattern (lambda not an eigenvalue) gives an empty
/// partition.
Partition blocks_from_rank_pattern(const RankPattern& rp);

/// Closed form r_k = n - sum_i min(b_i, k), k = 0..largest block.
/// Throws std::invalid_argument if the blocks do not fit in n.
RankPattern rank_pattern_from_blocks(const Partition& blocks, int n);

/// "n=10: 10,7,5,3,2,1,0"
std::string format_rank_pattern(const RankPattern& rp);
RankPattern parse_rank_pattern(const std::string& text);

}  // namespace segre
