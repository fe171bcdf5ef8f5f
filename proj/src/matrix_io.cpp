#include "groupmat/matrix_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace groupmat {

namespace {

constexpr std::array<std::string_view, 4> kHeaderKeys = {"group", "semantics", "rows", "cols"};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

std::size_t parse_dimension(std::string_view value, std::size_t line_no, std::size_t column) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size() || v == 0)
    throw ParseError("dimension must be a positive integer, got '" + std::string(value) + "'", line_no, column);
  return v;
}

}  // namespace

RawMatrix read_raw_matrix(std::string_view text) {
  RawMatrix raw;
  std::size_t header_seen = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view content = strip(line);
    if (content.empty() || content.front() == '#') continue;
    last_line = line_no;
    if (header_seen < kHeaderKeys.size()) {
      const auto key = kHeaderKeys[header_seen];
      const auto colon = content.find(':');
      const std::size_t column = static_cast<std::size_t>(content.data() - line.data()) + 1;
      if (colon == std::string_view::npos || strip(content.substr(0, colon)) != key)
        throw ParseError("expected header '" + std::string(key) + ":'", line_no, column);
      const std::string_view value = strip(content.substr(colon + 1));
      const std::size_t value_column = static_cast<std::size_t>(value.data() - line.data()) + 1;
      switch (header_seen) {
        case 0:
          if (value.empty()) throw ParseError("empty group descriptor", line_no, value_column);
          raw.header.group = std::string(value);
          raw.header.group_line = line_no;
          break;
        case 1:
          raw.header.semantics = value.empty() ? "none" : std::string(value);
          break;
        case 2:
          raw.header.rows = parse_dimension(value, line_no, value_column);
          break;
        case 3:
          raw.header.cols = parse_dimension(value, line_no, value_column);
          break;
      }
      ++header_seen;
      continue;
    }
    auto tokens = tokenize(line, line_no);
    if (raw.cells.size() == raw.header.rows)
      throw ParseError("more than " + std::to_string(raw.header.rows) + " matrix rows", line_no, tokens.front().column);
    if (tokens.size() != raw.header.cols)
      throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(raw.header.cols),
                       line_no, tokens.empty() ? 1 : tokens.front().column);
    raw.cells.push_back(std::move(tokens));
  }
  if (header_seen < kHeaderKeys.size())
    throw ParseError("missing header '" + std::string(kHeaderKeys[header_seen]) + ":'", last_line + 1, 1);
  if (raw.cells.size() != raw.header.rows)
    throw ParseError("found " + std::to_string(raw.cells.size()) + " matrix rows, header declares " +
                         std::to_string(raw.header.rows),
                     last_line + 1, 1);
  return raw;
}

MatrixDocument parse_matrix_from(const RawMatrix& raw) {
  GroupPtr group;
  try {
    group = make_group(raw.header.group);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), raw.header.group_line, 1);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), raw.header.group_line, 1);
  }
  std::vector<Entry> entries;
  entries.reserve(raw.header.rows * raw.header.cols);
  for (const auto& row : raw.cells)
    for (const auto& tok : row) {
      try {
        entries.push_back(parse_element(tok.text, *group));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), tok.line, tok.column);
      }
    }
  return {GMatrix(group, raw.header.rows, raw.header.cols, std::move(entries)), raw.header.semantics};
}

MatrixDocument parse_matrix(std::string_view text) { return parse_matrix_from(read_raw_matrix(text)); }

std::string serialize(const GMatrix& m, std::string_view semantics) {
  std::string out;
  out += "group: " + m.group()->descriptor() + "\n";
  out += "semantics: " + std::string(semantics.empty() ? "none" : semantics) + "\n";
  out += "rows: " + std::to_string(m.rows()) + "\n";
  out += "cols: " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += entry_token(m(r, c), *m.group());
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace groupmat
