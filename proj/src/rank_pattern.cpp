#include "segre/rank_pattern.hpp"

#include "segre/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace segre {

RankPattern::RankPattern(int dimension, std::vector<int> ranks)
    : dimension_(dimension) {
  if (dimension < 1) throw InvalidRankPattern("rank pattern dimension must be >= 1");
  if (ranks.empty() || ranks.front() != dimension) {
    throw InvalidRankPattern("rank pattern must start with r_0 = n = " +
                             std::to_string(dimension));
  }
  std::size_t keep = ranks.size();
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    if (ranks[k] < 0) throw InvalidRankPattern("ranks must be non-negative");
    if (ranks[k] > ranks[k - 1]) {
      throw InvalidRankPattern("rank increases at k = " + std::to_string(k));
    }
    if (ranks[k] == ranks[k - 1] && keep == ranks.size()) keep = k;
  }
  for (std::size_t k = keep; k < ranks.size(); ++k) {
    if (ranks[k] != ranks[keep - 1]) {
      throw InvalidRankPattern("rank decreases again after stabilizing at k = " +
                               std::to_string(keep - 1));
    }
  }
  ranks.resize(keep);
  ranks_ = std::move(ranks);
}

NullityGrowth::NullityGrowth(std::vector<int> q) : q_(std::move(q)) {
  for (std::size_t k = 0; k < q_.size(); ++k) {
    if (q_[k] < 1) throw std::invalid_argument("nullity growth entries must be positive");
    if (k > 0 && q_[k] > q_[k - 1]) {
      throw NonMonotoneGrowth(
          "nullity growth increases: q_" + std::to_string(k + 1) + " = " +
              std::to_string(q_[k]) + " > q_" + std::to_string(k) + " = " +
              std::to_string(q_[k - 1]) + "; no matrix has this rank pattern",
          k + 1);
    }
  }
}

int NullityGrowth::total() const noexcept {
  return std::accumulate(q_.begin(), q_.end(), 0);
}

NullityGrowth nullity_growth(const RankPattern& rp) {
  const auto& r = rp.ranks();
  std::vector<int> q;
  q.reserve(r.size() - 1);
  for (std::size_t k = 1; k < r.size(); ++k) q.push_back(r[k - 1] - r[k]);
  return NullityGrowth(std::move(q));
}

Partition blocks_from_rank_pattern(const RankPattern& rp) {
  return conjugate(Partition(nullity_growth(rp).values()));
}

RankPattern rank_pattern_from_blocks(const Partition& blocks, int n) {
  if (blocks.weight() > n) {
    throw std::invalid_argument("blocks of total size " +
                                std::to_string(blocks.weight()) +
                                " do not fit in dimension " + std::to_string(n));
  }
  std::vector<int> ranks;
  for (int k = 0; k <= blocks.largest(); ++k) {
    int absorbed = 0;
    for (int b : blocks) absorbed += std::min(b, k);
    ranks.push_back(n - absorbed);
  }
  return RankPattern(n, std::move(ranks));
}

std::string format_rank_pattern(const RankPattern& rp) {
  std::string out = "n=" + std::to_string(rp.dimension()) + ": ";
  for (std::size_t k = 0; k < rp.ranks().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(rp.ranks()[k]);
  }
  return out;
}

RankPattern parse_rank_pattern(const std::string& text) {
  detail::TextCursor cur(text);
  cur.expect('n');
  cur.expect('=');
  const long long n = cur.integer();
  if (n < 1 || n > INT_MAX / 2) cur.fail("dimension out of range");
  cur.expect(':');
  std::vector<int> ranks;
  do {
    const long long r = cur.integer();
    if (r > n) cur.fail("rank exceeds the dimension");
    ranks.push_back(static_cast<int>(r));
  } while (cur.accept(','));
  cur.expect_end();
  return RankPattern(static_cast<int>(n), std::move(ranks));
}

}  // namespace segre
