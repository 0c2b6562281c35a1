#pragma once

#include "segre/numeric.hpp"
#include "segre/partitions.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace segre {

/// Jordan block sizes grouped by eigenvalue, one non-empty Partition per
/// distinct eigenvalue.
///
/// Groups are kept in the order they were given so that a JordanSpec can
/// align eigenvalues with them; canonical() sorts them (heavier groups first,
/// equal weights by descending parts). Equality and ordering always compare
/// canonical forms.
class SegreCharacteristic {
 public:
  SegreCharacteristic() = default;
  /// Throws std::invalid_argument if any group is empty.
  explicit SegreCharacteristic(std::vector<Partition> groups);

  const std::vector<Partition>& groups() const noexcept { return groups_; }
  std::size_t group_count() const noexcept { return groups_.size(); }
  int total_weight() const noexcept { return total_weight_; }

  SegreCharacteristic canonical() const;
  bool is_canonical() const;

  /// Every block size across all groups, sorted descending. This is the
  /// underlying Jordan block structure with eigenvalue identity forgotten.
  Partition flattened() const;

  bool operator==(const SegreCharacteristic& other) const;

 private:
  std::vector<Partition> groups_;
  int total_weight_ = 0;
};

/// Strict weak order on groups used for canonicalization: a comes before b
/// if it is heavier, or equally heavy with lexicographically larger parts.
bool group_precedes(const Partition& a, const Partition& b);

/// Total order on canonical characteristics used by enumerate_segre:
/// flattened block structure in reverse-lexicographic order, then fewer
/// groups first, then group by group under group_precedes.
bool segre_precedes(const SegreCharacteristic& a, const SegreCharacteristic& b);

/// Cartesian product of the partitions of each part of `outer`. Each tuple
/// is one characteristic whose groups have weights outer[0], outer[1], ...
/// Duplicates are not removed.
std::vector<SegreCharacteristic> multipartitions(const Partition& outer);

/// Every distinct canonical characteristic of total weight n >= 1, ordered
/// by segre_precedes. Its length is P(n).
std::vector<SegreCharacteristic> enumerate_segre(int n);

/// P(n) as the x^n coefficient of prod_{k=1..n} (1 - x^k)^(-p(k)).
BigInt count_segre_gf(int n);

/// P(n) as a sum over the partitions a of n (the eigenvalue multiplicities).
/// Each a contributes the number of distinct ways to split every part into
/// Jordan blocks, counted as multisets where a part value repeats.
BigInt count_segre_sum(int n);

/// "[(2,1),(3),(1),(2,1)]", groups in stored order, always parenthesized.
std::string format_segre(const SegreCharacteristic& s);

/// Accepts parenthesized groups and bare integers (singleton groups).
/// Whitespace is ignored. Group order is preserved.
SegreCharacteristic parse_segre(const std::string& text);

}  // namespace segre
