#include "segre/jordan.hpp"

#include "segre/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace segre {

JordanSpec::JordanSpec(SegreCharacteristic segre, std::vector<Rational> eigenvalues)
    : segre_(std::move(segre)), eigenvalues_(std::move(eigenvalues)) {
  if (segre_.group_count() == 0) throw InvalidJordanSpec("Jordan spec needs at least one group");
  if (eigenvalues_.size() != segre_.group_count()) {
    throw InvalidJordanSpec("expected " + std::to_string(segre_.group_count()) +
                            " eigenvalues, got " + std::to_string(eigenvalues_.size()));
  }
  auto sorted = eigenvalues_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidJordanSpec("eigenvalues must be pairwise distinct");
  }
}

JordanSpec JordanSpec::with_positional_eigenvalues(SegreCharacteristic segre) {
  std::vector<Rational> values;
  for (std::size_t k = 0; k < segre.group_count(); ++k) {
    values.emplace_back(static_cast<long long>(k + 1));
  }
  return JordanSpec(std::move(segre), std::move(values));
}

ExactMatrix build_jordan(const JordanSpec& spec) {
  const Eigen::Index n = spec.dimension();
  ExactMatrix m = ExactMatrix::Zero(n, n);
  Eigen::Index offset = 0;
  for (std::size_t g = 0; g < spec.segre().group_count(); ++g) {
    const Rational& lambda = spec.eigenvalues()[g];
    for (int block : spec.segre().groups()[g]) {
      for (Eigen::Index i = 0; i < block; ++i) {
        m(offset + i, offset + i) = lambda;
        if (i + 1 < block) m(offset + i, offset + i + 1) = 1;
      }
      offset += block;
    }
  }
  return m;
}

RankPattern rank_pattern_of(const ExactMatrix& m, const Rational& lambda) {
  const ExactMatrix shifted = shift(m, lambda);
  const int n = static_cast<int>(m.rows());
  std::vector<int> ranks{n};
  ExactMatrix power = shifted;
  while (true) {
    const int r = static_cast<int>(rank(power));
    if (r == ranks.back()) break;
    ranks.push_back(r);
    if (r == 0) break;
    power = (power * shifted).eval();
  }
  return RankPattern(n, std::move(ranks));
}

AnalysisReport analyze(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("analyze needs a square matrix");
  const int n = static_cast<int>(m.rows());
  const BigInt scale = denominator_lcm(m);
  const RootSplit split = rational_roots(char_poly(m));
  if (split.remainder_degree() > 0) throw IrrationalEigenvalue(split.remainder_degree());

  AnalysisReport report;
  std::vector<Partition> groups;
  int covered = 0;
  for (const auto& root : split.roots) {
    const Rational lambda = root.value / scale;
    RankPattern rp = rank_pattern_of(m, lambda);
    Partition blocks = blocks_from_rank_pattern(rp);
    if (blocks.weight() != root.multiplicity) {
      throw InternalInconsistency("eigenvalue " + to_string(lambda) + " has algebraic multiplicity " +
                                  std::to_string(root.multiplicity) + " but its blocks sum to " +
                                  std::to_string(blocks.weight()));
    }
    covered += blocks.weight();
    groups.push_back(blocks);
    report.per_eigenvalue.push_back({lambda, std::move(rp), std::move(blocks)});
  }
  if (covered != n) {
    throw InternalInconsistency("Jordan blocks cover " + std::to_string(covered) +
                                " of " + std::to_string(n) + " dimensions");
  }
  report.segre = SegreCharacteristic(std::move(groups)).canonical();
  return report;
}

std::string format_report_text(const AnalysisReport& report) {
  std::string out = "segre: " + format_segre(report.segre) + "\n";
  for (const auto& e : report.per_eigenvalue) {
    out += "eigenvalue " + to_string(e.eigenvalue) + ": rank pattern " +
           format_rank_pattern(e.rank_pattern) + "; growth " +
           format_partition(Partition(nullity_growth(e.rank_pattern).values())) +
           "; blocks " + format_partition(e.blocks) + "\n";
  }
  return out;
}

std::string format_report_json(const AnalysisReport& report) {
  nlohmann::ordered_json doc;
  doc["segre"] = format_segre(report.segre);
  doc["eigenvalues"] = nlohmann::ordered_json::array();
  for (const auto& e : report.per_eigenvalue) {
    nlohmann::ordered_json item;
    item["value"] = to_string(e.eigenvalue);
    item["rank_pattern"] = e.rank_pattern.ranks();
    item["blocks"] = e.blocks.as_vector();
    doc["eigenvalues"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace segre
