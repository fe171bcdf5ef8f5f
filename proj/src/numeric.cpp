#include <charconv>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "groupmat/verify.hpp"

namespace groupmat {

namespace {

constexpr Quaternion kQ8Units[8] = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
                                    {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};

std::string fraction_text(std::int64_t num, std::int64_t den) {
  const auto g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string value_text(const Quaternion& q, std::int64_t den) {
  if (den == 1 || q.is_real()) return den == 1 ? q.to_string() : fraction_text(q.re, den);
  return "(" + q.to_string() + ")/" + std::to_string(den);
}

std::int64_t parse_int(std::string_view s, const Token& tok) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad rational token '" + tok.text + "'", tok.line, tok.column);
  return v;
}

}  // namespace

std::string_view numeric_kind_name(NumericKind k) noexcept {
  switch (k) {
    case NumericKind::real:
      return "real";
    case NumericKind::complex:
      return "complex";
    case NumericKind::quaternion:
      return "quaternion";
    case NumericKind::cretan:
      return "cretan";
  }
  return "?";
}

NumericMatrix to_numeric(const GMatrix& m) {
  const Group& g = *m.group();
  NumericMatrix out{m.rows(), m.cols(), {}, 1};
  out.entries.reserve(m.entries().size());
  for (Entry e : m.entries()) {
    if (e.is_wildcard()) {
      out.entries.emplace_back(std::nullopt);
      continue;
    }
    if (e.is_zero()) {
      out.entries.emplace_back(Quaternion{});
      continue;
    }
    switch (g.kind()) {
      case GroupKind::q8:
        out.entries.emplace_back(kQ8Units[e.index()]);
        break;
      case GroupKind::cyclic:
      case GroupKind::roots: {
        const long long k4 = 4LL * e.index();
        if (k4 % g.order() != 0)
          throw std::invalid_argument("entry " + g.token(e.index()) + " of " + g.descriptor() +
                                      " is not a Gaussian integer");
        constexpr Quaternion kPowersOfI[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
        out.entries.emplace_back(kPowersOfI[(k4 / g.order()) % 4]);
        break;
      }
      default:
        throw std::invalid_argument("entries of " + g.descriptor() + " have no numeric meaning");
    }
  }
  return out;
}

NumericMatrix parse_numeric_matrix(const RawMatrix& raw) {
  if (raw.header.group != "rational")
    throw ParseError("numeric matrix needs 'group: rational'", raw.header.group_line, 1);
  struct Cell {
    bool wildcard = false;
    std::int64_t num = 0, den = 1;
  };
  std::vector<Cell> cells;
  std::int64_t common = 1;
  for (const auto& row : raw.cells)
    for (const auto& tok : row) {
      Cell c;
      if (tok.text == "*") {
        c.wildcard = true;
      } else if (tok.text == ".") {
        c.num = 0;
      } else {
        std::string_view s = tok.text;
        const auto slash = s.find('/');
        c.num = parse_int(s.substr(0, slash), tok);
        if (slash != std::string_view::npos) {
          c.den = parse_int(s.substr(slash + 1), tok);
          if (c.den <= 0) throw ParseError("denominator must be positive in '" + tok.text + "'", tok.line, tok.column);
        }
      }
      common = std::lcm(common, c.den);
      cells.push_back(c);
    }
  NumericMatrix out{raw.header.rows, raw.header.cols, {}, common};
  for (const auto& c : cells) {
    if (c.wildcard) out.entries.emplace_back(std::nullopt);
    else out.entries.emplace_back(Quaternion{c.num * (common / c.den), 0, 0, 0});
  }
  return out;
}

VerificationReport verify_numeric(const NumericMatrix& m, NumericKind kind) {
  VerificationReport report;
  report.property = std::string(numeric_kind_name(kind));
  const std::int64_t den = m.denominator;

  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& x = m(r, c);
      if (!x) {
        if (kind != NumericKind::real)
          throw std::invalid_argument("wildcards are only allowed for the real kind");
        continue;
      }
      const bool in_domain = kind == NumericKind::quaternion || (kind == NumericKind::complex && x->is_complex()) ||
                             ((kind == NumericKind::real || kind == NumericKind::cretan) && x->is_real());
      if (!in_domain)
        throw std::invalid_argument("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                                    value_text(*x, den) + " is outside the " + report.property + " domain");
      if (kind == NumericKind::cretan && (x->re > den || x->re < -den))
        report.add_failure({FailureScope::entry, r, c, "|x|<=1", value_text(*x, den), "magnitude"});
    }

  auto gram = [&](std::size_t r, std::size_t s) {
    Quaternion acc;
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto &x = m(r, c), &y = m(s, c);
      if (!x || !y) continue;
      acc += quat_mul(*x, *y, true);
    }
    return acc;
  };

  const Quaternion constant = m.rows > 0 ? gram(0, 0) : Quaternion{};
  report.set_param("constant", constant.is_real() ? fraction_text(constant.re, den * den) : constant.to_string());
  report.set_param("n", std::to_string(m.rows) + "x" + std::to_string(m.cols));
  if (kind == NumericKind::real && std::any_of(m.entries.begin(), m.entries.end(), [](auto& e) { return !e; }))
    report.set_param("wildcards", "masked");
  const std::string constant_text = value_text(constant, den * den);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t s = r; s < m.rows; ++s) {
      const Quaternion v = gram(r, s);
      const Quaternion want = r == s ? constant : Quaternion{};
      if (v == want) continue;
      report.add_failure({FailureScope::pair, r, s, r == s ? constant_text : "0", value_text(v, den * den), ""});
    }
  report.finish();
  return report;
}

VerificationReport verify_numeric(const GMatrix& m, NumericKind kind) { return verify_numeric(to_numeric(m), kind); }

}  // namespace groupmat
