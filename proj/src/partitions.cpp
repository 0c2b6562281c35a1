#include "segre/partitions.hpp"

#include "segre/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace segre {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<BigInt> partition_counts_upto(int n) {
  if (n < 0) throw std::invalid_argument("partition_count needs n >= 0");
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[m] = sum;
  }
  return p;
}

BigInt partition_count(int n) { return partition_counts_upto(n).back(); }

namespace {

void visit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                      const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    visit_partitions(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int n,
                        const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions needs n >= 0");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  visit_partitions(n, n, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p) {
    for (int j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  out += ']';
  return out;
}

Partition parse_partition(const std::string& text) {
  detail::TextCursor cur(text);
  cur.expect('[');
  std::vector<int> parts;
  if (!cur.accept(']')) {
    do {
      const std::size_t at = cur.position();
      const long long v = cur.integer();
      if (v < 1) throw ParseError("partition parts must be positive", at);
      if (!parts.empty() && v > parts.back()) {
        throw ParseError("partition parts must be non-increasing", at);
      }
      parts.push_back(static_cast<int>(v));
    } while (cur.accept(','));
    cur.expect(']');
  }
  cur.expect_end();
  return Partition(std::move(parts));
}

}  // namespace segre
