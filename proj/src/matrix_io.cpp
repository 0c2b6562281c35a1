#include "segre/matrix_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace segre {

namespace {

using nlohmann::json;

Rational parse_entry(const json& v, std::size_t i, std::size_t j) {
  const std::string where =
      "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
    return Rational(BigInt(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const ParseError& e) {
      throw MatrixFormatError(where + ": " + e.what());
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos &&
        parse_rational(text.substr(0, slash)) != numerator(q)) {
      throw MatrixFormatError(where + ": \"" + text + "\" is not in lowest terms");
    }
    return q;
  }
  throw MatrixFormatError(where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

ExactMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatrixFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixFormatError("matrix document must be a JSON object");
  for (const char* key : {"rows", "cols", "entries"}) {
    if (!doc.contains(key)) throw MatrixFormatError(std::string("missing \"") + key + "\"");
  }
  if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
    throw MatrixFormatError("\"rows\" and \"cols\" must be positive integers");
  }
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) throw MatrixFormatError("\"rows\" and \"cols\" must be positive");
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) {
    throw MatrixFormatError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
  }
  ExactMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw MatrixFormatError("row " + std::to_string(i) + " must have " +
                              std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_entry(row[j], i, j);
    }
  }
  return m;
}

ExactMatrix load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str());
}

std::string format_matrix_json(const ExactMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      const BigInt& num = numerator(v);
      if (denominator(v) == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
          num <= std::numeric_limits<std::int64_t>::max()) {
        row.push_back(num.convert_to<std::int64_t>());
      } else {
        row.push_back(to_string(v));
      }
    }
    entries.push_back(std::move(row));
  }
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace segre
