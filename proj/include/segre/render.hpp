#pragma once

#include "segre/jordan.hpp"
#include "segre/partitions.hpp"

#include <string>
#include <vector>

namespace segre {

/// What a cell of a Jordan matrix shows once eigenvalue values are
/// forgotten: zero, a superdiagonal 1, or the eigenvalue of group `index`.
struct Cell {
  enum class Kind { Zero, One, Eigenvalue };
  Kind kind = Kind::Zero;
  /// 1-based group position, only meaningful for Kind::Eigenvalue.
  int index = 0;

  bool operator==(const Cell&) const = default;
};

/// Dense n x n grid of cells, row-major.
class StructureGrid {
 public:
  explicit StructureGrid(int n);

  int size() const noexcept { return n_; }
  /// 0-based.
  const Cell& at(int row, int col) const { return cells_[row * n_ + col]; }
  Cell& at(int row, int col) { return cells_[row * n_ + col]; }
  /// Largest eigenvalue index present.
  int group_count() const noexcept;

 private:
  int n_;
  std::vector<Cell> cells_;
};

StructureGrid grid_of(const JordanSpec& spec);

/// n lines of n glyphs: '.' zero, '1' one, 'a', 'b', ... per group.
/// With more than 26 groups every cell becomes a right-aligned token of
/// equal width and eigenvalue cells read "[i]".
std::string render_ascii(const StructureGrid& g);

/// One SVG 1.1 document with the grids laid out row-major, `columns` per
/// row. Each grid is a <g class="segre-grid"> containing one framed rect
/// per cell. Throws std::invalid_argument for columns < 1.
std::string render_svg(const std::vector<StructureGrid>& grids, int columns);

/// Fill color for a cell as "#rrggbb".
std::string cell_color(const Cell& cell);

/// One row of '*' per part.
std::string render_ferrers(const Partition& p);
/// p on the left, conjugate(p) on the right.
std::string render_ferrers_conjugate_pair(const Partition& p);

}  // namespace segre
