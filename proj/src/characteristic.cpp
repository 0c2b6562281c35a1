#include "segre/characteristic.hpp"

#include "segre/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace segre {

SegreCharacteristic::SegreCharacteristic(std::vector<Partition> groups)
    : groups_(std::move(groups)) {
  for (const auto& g : groups_) {
    if (g.empty()) {
      throw std::invalid_argument("Segre characteristic groups must be non-empty");
    }
    total_weight_ += g.weight();
  }
}

bool group_precedes(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a > b;
}

SegreCharacteristic SegreCharacteristic::canonical() const {
  auto sorted = groups_;
  std::sort(sorted.begin(), sorted.end(), group_precedes);
  return SegreCharacteristic(std::move(sorted));
}

bool SegreCharacteristic::is_canonical() const {
  return std::is_sorted(groups_.begin(), groups_.end(), group_precedes);
}

Partition SegreCharacteristic::flattened() const {
  std::vector<int> all;
  for (const auto& g : groups_) all.insert(all.end(), g.begin(), g.end());
  return Partition::from_unsorted(std::move(all));
}

bool SegreCharacteristic::operator==(const SegreCharacteristic& other) const {
  if (total_weight_ != other.total_weight_ ||
      groups_.size() != other.groups_.size()) {
    return false;
  }
  return canonical().groups_ == other.canonical().groups_;
}

bool segre_precedes(const SegreCharacteristic& a, const SegreCharacteristic& b) {
  const Partition fa = a.flattened();
  const Partition fb = b.flattened();
  if (fa != fb) return fa > fb;
  if (a.group_count() != b.group_count()) {
    return a.group_count() < b.group_count();
  }
  for (std::size_t i = 0; i < a.group_count(); ++i) {
    const auto& ga = a.groups()[i];
    const auto& gb = b.groups()[i];
    if (ga != gb) return group_precedes(ga, gb);
  }
  return false;
}

std::vector<SegreCharacteristic> multipartitions(const Partition& outer) {
  std::vector<std::vector<Partition>> choices;
  choices.reserve(outer.length());
  for (int part : outer) choices.push_back(enumerate_partitions(part));

  std::vector<SegreCharacteristic> out;
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    std::vector<Partition> groups;
    groups.reserve(choices.size());
    for (std::size_t k = 0; k < choices.size(); ++k) {
      groups.push_back(choices[k][index[k]]);
    }
    out.emplace_back(std::move(groups));

    // Odometer increment, last position fastest.
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++index[k] < choices[k].size()) break;
      index[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

std::vector<SegreCharacteristic> enumerate_segre(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_segre needs n >= 1");
  std::set<SegreCharacteristic, decltype(&segre_precedes)> unique(&segre_precedes);
  for (const auto& outer : enumerate_partitions(n)) {
    for (const auto& s : multipartitions(outer)) unique.insert(s.canonical());
  }
  return {unique.begin(), unique.end()};
}

BigInt count_segre_gf(int n) {
  if (n < 0) throw std::invalid_argument("count_segre_gf needs n >= 0");
  const auto p = partition_counts_upto(n);
  std::vector<BigInt> series(static_cast<std::size_t>(n) + 1, BigInt(0));
  series[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // (1 - x^k)^(-c) = sum_j C(c + j - 1, j) x^(kj)
    const BigInt& c = p[k];
    std::vector<BigInt> binom(static_cast<std::size_t>(n / k) + 1);
    binom[0] = 1;
    for (int j = 1; j <= n / k; ++j) binom[j] = binom[j - 1] * (c + j - 1) / j;
    // Descending m so series[m - kj] is still the old coefficient.
    for (int m = n; m >= k; --m) {
      BigInt acc = series[m];
      for (int j = 1; k * j <= m; ++j) acc += binom[j] * series[m - k * j];
      series[m] = acc;
    }
  }
  return series[n];
}

BigInt count_segre_sum(int n) {
  if (n < 0) throw std::invalid_argument("count_segre_sum needs n >= 0");
  const auto p = partition_counts_upto(n);
  // A part value j repeated m times contributes the number of multisets of
  // size m drawn from the p(j) partitions of j: multisets[j][m] =
  // C(p(j) + m - 1, m).
  std::vector<std::vector<BigInt>> multisets(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    auto& row = multisets[j];
    row.resize(static_cast<std::size_t>(n / j) + 1);
    row[0] = 1;
    for (int m = 1; m <= n / j; ++m) row[m] = row[m - 1] * (p[j] + m - 1) / m;
  }
  BigInt total = 0;
  BigInt product;
  for_each_partition(n, [&](std::span<const int> parts) {
    product = 1;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t run = i;
      while (run < parts.size() && parts[run] == parts[i]) ++run;
      if (parts[i] > 1) product *= multisets[parts[i]][run - i];
      i = run;
    }
    total += product;
  });
  return total;
}

std::string format_segre(const SegreCharacteristic& s) {
  std::string out = "[";
  for (std::size_t g = 0; g < s.group_count(); ++g) {
    if (g > 0) out += ',';
    out += '(';
    const auto& group = s.groups()[g];
    for (std::size_t i = 0; i < group.length(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(group[i]);
    }
    out += ')';
  }
  out += ']';
  return out;
}

namespace {

int block_size(detail::TextCursor& cur) {
  const std::size_t at = cur.position();
  const long long v = cur.integer();
  if (v < 1) throw ParseError("block sizes must be positive", at);
  if (v > INT_MAX / 2) throw ParseError("block size too large", at);
  return static_cast<int>(v);
}

}  // namespace

SegreCharacteristic parse_segre(const std::string& text) {
  detail::TextCursor cur(text);
  cur.expect('[');
  std::vector<Partition> groups;
  do {
    std::vector<int> parts;
    if (cur.accept('(')) {
      if (cur.peek() == ')') cur.fail("empty group");
      do {
        parts.push_back(block_size(cur));
      } while (cur.accept(','));
      cur.expect(')');
    } else {
      parts.push_back(block_size(cur));
    }
    groups.push_back(Partition::from_unsorted(std::move(parts)));
  } while (cur.accept(','));
  cur.expect(']');
  cur.expect_end();
  return SegreCharacteristic(std::move(groups));
}

}  // namespace segre
