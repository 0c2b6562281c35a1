#pragma once

#include "segre/exact_linalg.hpp"

#include <filesystem>
#include <string>

namespace segre {

/// Reads {"rows": n, "cols": n, "entries": [[...], ...]}. Entries are JSON
/// integers or strings "p" / "p/q" with q > 0 in lowest terms. Throws
/// MatrixFormatError on anything else, including ragged rows.
ExactMatrix parse_matrix_json(const std::string& text);

/// Throws std::runtime_error if the file cannot be read.
ExactMatrix load_matrix_file(const std::filesystem::path& path);

/// Inverse of parse_matrix_json. Integers are written as JSON numbers when
/// they fit in 64 bits, everything else as strings.
std::string format_matrix_json(const ExactMatrix& m);

}  // namespace segre
