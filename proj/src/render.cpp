#include "segre/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace segre {

namespace {

constexpr int kCellSize = 16;
constexpr int kGutter = 8;

struct Rgb {
  int r, g, b;
};

// White and black for zero and one cells; the rest index eigenvalue groups.
constexpr Rgb kZeroColor{255, 255, 255};
constexpr Rgb kOneColor{0, 0, 0};
constexpr std::array<Rgb, 5> kGroupPalette{{
    {255, 128, 0},  // orange
    {0, 255, 0},    // green
    {255, 0, 0},    // red
    {0, 0, 255},    // blue
    {128, 0, 128},  // purple
}};

std::string hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace

StructureGrid::StructureGrid(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw std::invalid_argument("structure grid needs n >= 1");
}

int StructureGrid::group_count() const noexcept {
  int most = 0;
  for (const auto& c : cells_) {
    if (c.kind == Cell::Kind::Eigenvalue) most = std::max(most, c.index);
  }
  return most;
}

StructureGrid grid_of(const JordanSpec& spec) {
  StructureGrid grid(spec.dimension());
  int offset = 0;
  const auto& groups = spec.segre().groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int block : groups[g]) {
      for (int i = 0; i < block; ++i) {
        grid.at(offset + i, offset + i) = {Cell::Kind::Eigenvalue, static_cast<int>(g) + 1};
        if (i + 1 < block) grid.at(offset + i, offset + i + 1) = {Cell::Kind::One, 0};
      }
      offset += block;
    }
  }
  return grid;
}

std::string render_ascii(const StructureGrid& g) {
  const int n = g.size();
  const int groups = g.group_count();
  std::vector<std::string> lines;
  if (groups <= 26) {
    for (int i = 0; i < n; ++i) {
      std::string line;
      for (int j = 0; j < n; ++j) {
        const Cell& c = g.at(i, j);
        switch (c.kind) {
          case Cell::Kind::Zero: line += '.'; break;
          case Cell::Kind::One: line += '1'; break;
          case Cell::Kind::Eigenvalue: line += static_cast<char>('a' + c.index - 1); break;
        }
      }
      lines.push_back(std::move(line));
    }
    return join_lines(lines);
  }
  const std::size_t width = std::to_string(groups).size() + 2;
  for (int i = 0; i < n; ++i) {
    std::string line;
    for (int j = 0; j < n; ++j) {
      const Cell& c = g.at(i, j);
      std::string token = c.kind == Cell::Kind::Zero  ? "."
                          : c.kind == Cell::Kind::One ? "1"
                                                      : "[" + std::to_string(c.index) + "]";
      line += std::string(width - token.size(), ' ') + token;
    }
    lines.push_back(std::move(line));
  }
  return join_lines(lines);
}

std::string cell_color(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::Zero: return hex(kZeroColor);
    case Cell::Kind::One: return hex(kOneColor);
    case Cell::Kind::Eigenvalue: break;
  }
  const int slot = cell.index - 1;
  Rgb c = kGroupPalette[static_cast<std::size_t>(slot) % kGroupPalette.size()];
  // Each pass through the palette darkens it to 60%.
  for (int cycle = slot / static_cast<int>(kGroupPalette.size()); cycle > 0; --cycle) {
    c = {c.r * 3 / 5, c.g * 3 / 5, c.b * 3 / 5};
  }
  return hex(c);
}

std::string render_svg(const std::vector<StructureGrid>& grids, int columns) {
  if (columns < 1) throw std::invalid_argument("render_svg needs columns >= 1");
  const std::string header =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  if (grids.empty()) {
    return header + " width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"/>\n";
  }
  int largest = 0;
  for (const auto& g : grids) largest = std::max(largest, g.size());
  const int slot = largest * kCellSize;
  const int count = static_cast<int>(grids.size());
  const int used_columns = std::min(columns, count);
  const int rows = (count + columns - 1) / columns;
  const int width = used_columns * slot + (used_columns + 1) * kGutter;
  const int height = rows * slot + (rows + 1) * kGutter;

  std::string out = header + " width=\"" + std::to_string(width) + "\" height=\"" +
                    std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
                    " " + std::to_string(height) + "\">\n";
  out += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
  for (int k = 0; k < count; ++k) {
    const StructureGrid& g = grids[k];
    const int x = kGutter + (k % columns) * (slot + kGutter);
    const int y = kGutter + (k / columns) * (slot + kGutter);
    out += "<g class=\"segre-grid\" transform=\"translate(" + std::to_string(x) + "," +
           std::to_string(y) + ")\">\n";
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) {
        out += "<rect x=\"" + std::to_string(j * kCellSize) + "\" y=\"" +
               std::to_string(i * kCellSize) + "\" width=\"" + std::to_string(kCellSize) +
               "\" height=\"" + std::to_string(kCellSize) + "\" fill=\"" +
               cell_color(g.at(i, j)) + "\" stroke=\"#bfbfbf\" stroke-width=\"0.5\"/>\n";
      }
    }
    const std::string side = std::to_string(g.size() * kCellSize);
    out += "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" + side + "\" height=\"" + side +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_ferrers(const Partition& p) {
  std::vector<std::string> rows;
  for (int part : p) rows.emplace_back(static_cast<std::size_t>(part), '*');
  return join_lines(rows);
}

std::string render_ferrers_conjugate_pair(const Partition& p) {
  const Partition c = conjugate(p);
  const std::size_t left_width = static_cast<std::size_t>(p.largest());
  const std::size_t height = std::max(p.length(), c.length());
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < height; ++i) {
    std::string left = i < p.length() ? std::string(static_cast<std::size_t>(p[i]), '*') : "";
    std::string right = i < c.length() ? std::string(static_cast<std::size_t>(c[i]), '*') : "";
    std::string line = left;
    if (!right.empty()) line += std::string(left_width - left.size() + 3, ' ') + right;
    rows.push_back(std::move(line));
  }
  return join_lines(rows);
}

}  // namespace segre
