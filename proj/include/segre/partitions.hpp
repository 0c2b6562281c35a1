#pragma once

#include "segre/numeric.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace segre {

/// A non-increasing sequence of positive integers. The empty partition has
/// weight 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is non-increasing and
  /// every entry is at least 1.
  explicit Partition(std::vector<int> parts);

  /// Sorts descending first; still rejects parts below 1.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& as_vector() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  bool operator==(const Partition& other) const noexcept {
    return parts_ == other.parts_;
  }
  /// Plain lexicographic order on the parts.
  std::strong_ordering operator<=>(const Partition& other) const noexcept {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// p(0), ..., p(n) by Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_counts_upto(int n);

/// p(n), the number of partitions of n.
BigInt partition_count(int n);

/// Calls `visit` on each partition of n in reverse-lexicographic order
/// without materializing the list. The span is only valid during the call.
void for_each_partition(int n,
                        const std::function<void(std::span<const int>)>& visit);

/// All partitions of n, reverse-lexicographic: [4], [3,1], [2,2], [2,1,1], ...
std::vector<Partition> enumerate_partitions(int n);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& p);

/// "[3,1]"; the empty partition is "[]".
std::string format_partition(const Partition& p);

/// Inverse of format_partition. Whitespace is ignored; parts must already be
/// non-increasing.
Partition parse_partition(const std::string& text);

}  // namespace segre
