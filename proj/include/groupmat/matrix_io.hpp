#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "groupmat/gmatrix.hpp"

namespace groupmat {

// Matrix text format:
//
//   group: cyclic 5
//   semantics: balance
//   rows: 3
//   cols: 3
//   0 0 0
//   0 1 2
//   0 2 1
//
// The four header keys come first, in this order. Each following line holds
// one matrix row of whitespace-separated tokens. Blank lines and lines
// starting with '#' are ignored anywhere. The group value "rational" marks a
// numeric matrix of integer or p/q tokens instead of group elements.

struct MatrixHeader {
  std::string group;
  std::string semantics;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t group_line = 1;
};

struct Token {
  std::string text;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

/// Header plus the untyped token grid, dimensions already checked.
struct RawMatrix {
  MatrixHeader header;
  std::vector<std::vector<Token>> cells;
};

RawMatrix read_raw_matrix(std::string_view text);

struct MatrixDocument {
  GMatrix matrix;
  std::string semantics;
};

/// Throws ParseError with the line/column of the offending header or token.
MatrixDocument parse_matrix(std::string_view text);
MatrixDocument parse_matrix_from(const RawMatrix& raw);

std::string serialize(const GMatrix& m, std::string_view semantics = "none");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace groupmat
