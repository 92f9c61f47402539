#ifndef SUBDEPTH_MATRIX_IO_HPP
#define SUBDEPTH_MATRIX_IO_HPP

// Plain-text matrix format:
//
//   # comment lines start with '#'
//   r s
//   <r lines of s nonnegative decimal integers>

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subdepth/exact_matrix.hpp"
#include "subdepth/inclusion_matrix.hpp"

namespace subdepth {

namespace detail {

inline bool is_decimal(std::string_view token) {
  if (token.empty()) return false;
  for (char ch : token)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline std::vector<std::string> split_whitespace(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

struct NumberedLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-comment, non-blank lines with 1-based line numbers.
inline std::vector<NumberedLine> content_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

inline std::string at_line(std::size_t number) { return "line " + std::to_string(number) + ": "; }

}  // namespace detail

/// Parses the text format into a nonnegative integer matrix; shape and
/// syntax are checked, zero rows and columns are allowed.
inline IntMatrix parse_int_matrix(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw input_error("missing header line 'r s'");
  const auto& header = lines.front();
  if (header.tokens.size() != 2 || !detail::is_decimal(header.tokens[0]) ||
      !detail::is_decimal(header.tokens[1]))
    throw input_error(detail::at_line(header.number) +
                      "malformed header, expected two positive integers 'r s'");
  std::size_t rows = 0, cols = 0;
  try {
    rows = std::stoul(header.tokens[0]);
    cols = std::stoul(header.tokens[1]);
  } catch (const std::exception&) {
    throw input_error(detail::at_line(header.number) + "malformed header, dimension too large");
  }
  if (rows == 0 || cols == 0)
    throw input_error(detail::at_line(header.number) +
                      "malformed header, dimensions must be positive");
  if (lines.size() - 1 < rows)
    throw input_error("expected " + std::to_string(rows) + " matrix rows, found " +
                      std::to_string(lines.size() - 1));
  if (lines.size() - 1 > rows)
    throw input_error(detail::at_line(lines[rows + 1].number) + "unexpected extra row");

  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& line = lines[i + 1];
    if (line.tokens.size() != cols)
      throw input_error(detail::at_line(line.number) + "row " + std::to_string(i + 1) +
                        " has " + std::to_string(line.tokens.size()) + " entries, expected " +
                        std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string& token = line.tokens[j];
      const std::string cell = "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
      if (token.front() == '-' && detail::is_decimal(std::string_view(token).substr(1)))
        throw input_error(detail::at_line(line.number) + "negative entry " + token + " at " + cell);
      if (!detail::is_decimal(token))
        throw input_error(detail::at_line(line.number) + "invalid entry '" + token + "' at " +
                          cell);
      m(i, j) = BigInt(token);
    }
  }
  return m;
}

/// Parses and validates an inclusion matrix (no zero row or column).
inline InclusionMatrix parse_matrix(std::string_view text) {
  IntMatrix m = parse_int_matrix(text);
  // Locate zero rows/columns here so the message can carry the file line.
  const auto lines = detail::content_lines(text);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols() && !nonzero; ++j) nonzero = m(i, j) != 0;
    if (!nonzero)
      throw input_error(detail::at_line(lines[i + 1].number) + "zero row " + std::to_string(i + 1));
  }
  return InclusionMatrix(std::move(m));
}

/// Inverse of parse_int_matrix: header line, then one line per row.
inline std::string render_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

inline std::string render_matrix(const InclusionMatrix& m) { return render_matrix(m.matrix()); }

}  // namespace subdepth

#endif  // SUBDEPTH_MATRIX_IO_HPP
