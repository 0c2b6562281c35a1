#pragma once

#include "segre/characteristic.hpp"
#include "segre/exact_linalg.hpp"
#include "segre/rank_pattern.hpp"

#include <string>
#include <vector>

namespace segre {

/// A Segre characteristic with one eigenvalue per group, aligned with the
/// characteristic's stored group order. Eigenvalues must be pairwise
/// distinct; the constructor throws InvalidJordanSpec otherwise.
class JordanSpec {
 public:
  JordanSpec(SegreCharacteristic segre, std::vector<Rational> eigenvalues);

  /// Eigenvalue k+1 for group k.
  static JordanSpec with_positional_eigenvalues(SegreCharacteristic segre);

  const SegreCharacteristic& segre() const noexcept { return segre_; }
  const std::vector<Rational>& eigenvalues() const noexcept {
    return eigenvalues_;
  }
  int dimension() const noexcept { return segre_.total_weight(); }

 private:
  SegreCharacteristic segre_;
  std::vector<Rational> eigenvalues_;
};

struct EigenvalueReport {
  Rational eigenvalue;
  RankPattern rank_pattern;
  Partition blocks;
};

struct AnalysisReport {
  /// Canonical.
  SegreCharacteristic segre;
  /// Ascending by eigenvalue.
  std::vector<EigenvalueReport> per_eigenvalue;
};

/// Block-diagonal Jordan matrix: groups in stored order, each group's
/// blocks in non-increasing size, eigenvalue on the diagonal and 1 on the
/// superdiagonal inside each block.
ExactMatrix build_jordan(const JordanSpec& spec);

/// Ranks of (m - lambda I)^k, built up one multiplication at a time until
/// two consecutive ranks agree.
RankPattern rank_pattern_of(const ExactMatrix& m, const Rational& lambda);

/// Segre characteristic of a square rational matrix. Throws
/// DimensionMismatch for non-square input, IrrationalEigenvalue when the
/// characteristic polynomial does not split over Q.
AnalysisReport analyze(const ExactMatrix& m);

std::string format_report_text(const AnalysisReport& report);
/// {"segre": "...", "eigenvalues": [{"value", "rank_pattern", "blocks"}, ...]}
std::string format_report_json(const AnalysisReport& report);

}  // namespace segre
