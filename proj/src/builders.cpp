#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "groupmat/constructions.hpp"

namespace groupmat {

namespace {

std::vector<Entry> parse_row(std::string_view text, const Group& g) {
  std::vector<Entry> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    const auto end = std::min(text.find(' ', start), text.size());
    out.push_back(parse_element(text.substr(start, end - start), g));
    pos = end;
  }
  return out;
}

std::vector<Entry> digit_row(std::string_view digits) {
  std::vector<Entry> out;
  for (char ch : digits) out.push_back(Entry::element(ch - '0'));
  return out;
}

}  // namespace

// -- GH(10; Z6) -----------------------------------------------------------------------

std::array<std::vector<Entry>, 4> gh10_printed_rows() {
  const auto g = Group::roots(6);
  return {parse_row("-1 w w^2 w^2 w", *g), parse_row("1 w^2 w w w^2", *g), parse_row("1 w w^2 w^2 w", *g),
          parse_row("1 -w^2 -w^2 -w -w^2", *g)};
}

std::string Gh10Candidate::label() const {
  static constexpr char kNames[] = {'X', 'Y', 'Z', 'W'};
  std::string out;
  for (int b = 0; b < 4; ++b) {
    if (b) out += ' ';
    out += kNames[b];
    out += "=r" + std::to_string(assignment[b]);
  }
  return out;
}

GMatrix gh10_matrix(const std::array<std::vector<Entry>, 4>& rows, const std::array<int, 4>& assignment) {
  const auto g = Group::roots(6);
  auto block = [&](int name) { return circulant(g, rows[assignment[name]]); };
  // Names are X, Y, Z, W = 0, 1, 2, 3, tiled as [[X, Y], [W, Z]].
  return block_grid({{block(0), block(1)}, {block(3), block(2)}});
}

std::vector<Gh10Candidate> build_gh10_z6(const std::array<std::vector<Entry>, 4>& rows) {
  std::vector<Gh10Candidate> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    auto m = gh10_matrix(rows, perm);
    auto report = verify_butson(m, 6);
    out.push_back({perm, std::move(m), std::move(report)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Gh10Candidate> build_gh10_z6() { return build_gh10_z6(gh10_printed_rows()); }

std::vector<Gh10Repair> locate_gh10_repairs() {
  const auto printed = gh10_printed_rows();
  std::vector<Gh10Repair> out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < static_cast<int>(printed[r].size()); ++c)
      for (int v = 0; v < 6; ++v) {
        if (printed[r][c].index() == v) continue;
        auto rows = printed;
        rows[r][c] = Entry::element(v);
        int passing = 0;
        for (const auto& cand : build_gh10_z6(rows)) passing += cand.report.pass ? 1 : 0;
        if (passing > 0) out.push_back({r, c, printed[r][c], Entry::element(v), passing});
      }
  return out;
}

// -- four circulants ----------------------------------------------------------------

std::string_view block_form_name(BlockForm f) noexcept {
  switch (f) {
    case BlockForm::plain:
      return "plain";
    case BlockForm::transpose:
      return "transpose";
    case BlockForm::back_circulant:
      return "back-circulant";
  }
  return "?";
}

std::string Arrangement::label() const {
  std::string out = "latin=";
  for (int r = 0; r < 4; ++r) {
    if (r) out += '/';
    for (int c = 0; c < 4; ++c) out += static_cast<char>('A' + letters[r][c]);
  }
  out += " forms=";
  for (auto f : form) out += f == BlockForm::plain ? 'p' : f == BlockForm::transpose ? 't' : 'b';
  return out;
}

const std::vector<Arrangement>& arrangement_catalog() {
  static const std::vector<Arrangement> catalog = [] {
    std::vector<std::array<std::array<int, 4>, 4>> squares;
    std::array<std::array<int, 4>, 4> sq{};
    // Cells filled in row-major order with the smallest symbol first, so
    // squares come out in lexicographic order.
    auto fill = [&](auto&& self, int cell) -> void {
      if (cell == 16) {
        squares.push_back(sq);
        return;
      }
      const int r = cell / 4, c = cell % 4;
      for (int s = 0; s < 4; ++s) {
        bool ok = true;
        for (int k = 0; k < c && ok; ++k) ok = sq[r][k] != s;
        for (int k = 0; k < r && ok; ++k) ok = sq[k][c] != s;
        if (!ok) continue;
        sq[r][c] = s;
        self(self, cell + 1);
      }
    };
    fill(fill, 0);
    std::vector<Arrangement> out;
    out.reserve(squares.size() * 81);
    for (const auto& s : squares)
      for (int f = 0; f < 81; ++f) {
        Arrangement a;
        a.letters = s;
        for (int l = 0, rest = f; l < 4; ++l) {
          static constexpr int kPow[] = {27, 9, 3, 1};
          a.form[l] = static_cast<BlockForm>(rest / kPow[l]);
          rest %= kPow[l];
        }
        out.push_back(a);
      }
    return out;
  }();
  return catalog;
}

GMatrix four_circulant_matrix(GroupPtr group, const std::array<std::vector<Entry>, 4>& rows, const Arrangement& a) {
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw std::invalid_argument("four_circulant: first rows differ in length");
  std::array<GMatrix, 4> forms = {GMatrix(group, 1, 1), GMatrix(group, 1, 1), GMatrix(group, 1, 1),
                                  GMatrix(group, 1, 1)};
  for (int l = 0; l < 4; ++l) {
    switch (a.form[l]) {
      case BlockForm::plain:
        forms[l] = circulant(group, rows[l]);
        break;
      case BlockForm::transpose:
        forms[l] = transpose(circulant(group, rows[l]));
        break;
      case BlockForm::back_circulant:
        forms[l] = back_circulant(group, rows[l]);
        break;
    }
  }
  std::vector<std::vector<GMatrix>> grid(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) grid[r].push_back(forms[a.letters[r][c]]);
  return block_grid(grid);
}

std::vector<ArrangementResult> build_four_circulant(GroupPtr group, const std::array<std::vector<Entry>, 4>& rows,
                                                    const std::vector<Arrangement>& arrangements, unsigned jobs) {
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw std::invalid_argument("four_circulant: first rows differ in length");
  std::vector<ArrangementResult> out(arrangements.size());
  BalanceOptions options;
  options.max_failures = 1;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out[i] = {arrangements[i], verify_balance(four_circulant_matrix(group, rows, arrangements[i]), options)};
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || arrangements.size() < 2) {
    work(0, arrangements.size());
    return out;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (arrangements.size() + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < arrangements.size(); begin += chunk)
    threads.emplace_back(work, begin, std::min(arrangements.size(), begin + chunk));
  for (auto& t : threads) t.join();
  return out;
}

std::array<std::vector<Entry>, 4> klein_rows(int length) {
  const auto g = Group::product({2, 2});
  if (length == 5)
    return {parse_row("ab b e e e", *g), parse_row("b a e e a", *g), parse_row("e ab e e b", *g),
            parse_row("ab a e e a", *g)};
  if (length == 7)
    return {parse_row("e a a ab a ab ab", *g), parse_row("e b b ab b ab ab", *g), parse_row("e a a b a b b", *g),
            parse_row("e ab b ab a a b", *g)};
  throw std::invalid_argument("klein_rows: length must be 5 or 7, got " + std::to_string(length));
}

// -- Brock vectors ---------------------------------------------------------------------

BuildResult build_brock(int length) {
  static constexpr const char* kLength7[3][3] = {
      {"1121121", "0012210", "1012210"}, {"0012210", "0100001", "2012210"}, {"1012210", "2012210", "2220022"}};
  static constexpr const char* kLength13[3][3] = {{"1200020020002", "0011202202110", "1011202202110"},
                                                  {"0011202202110", "0222121121222", "2011202202110"},
                                                  {"1011202202110", "2011202202110", "2100111111001"}};
  if (length != 7 && length != 13)
    throw std::invalid_argument("build_brock: length must be 7 or 13, got " + std::to_string(length));
  const auto& digits = length == 7 ? kLength7 : kLength13;
  const auto g = Group::cyclic(3);
  std::vector<std::vector<GMatrix>> grid(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) grid[r].push_back(circulant(g, digit_row(digits[r][c])));
  auto m = block_grid(grid);
  auto report = verify_balance(m);
  return {std::move(m), std::move(report)};
}

std::array<std::array<ResidueCoefficients, 3>, 3> residue_39_coefficients() {
  const auto e = Entry::element(0), w = Entry::element(1), w2 = Entry::element(2), none = Entry::zero();
  return {{{{{w, w2, e, e}, {e, e, w, w2}, {w, e, none, w2}}},
           {{{e, w2, w2, w2}, {e, e, w, w2}, {w2, e, w, w2}}},
           {{{w, e, w, w2}, {w2, e, w, w2}, {w2, w, w, w}}}}};
}

BuildResult build_residue_39() {
  const auto g = Group::cyclic(3);
  const auto coeffs = residue_39_coefficients();
  std::vector<std::vector<GMatrix>> grid(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) grid[r].push_back(residue_class_matrix(g, 13, coeffs[r][c]));
  auto m = block_grid(grid);
  auto report = verify_balance(m);
  return {std::move(m), std::move(report)};
}

// -- plug-in doubling --------------------------------------------------------------------

BuildResult plugin_double(const GMatrix& c, PluginAdjoint adjoint) {
  const Group& g = *c.group();
  if ((g.kind() != GroupKind::roots && g.kind() != GroupKind::cyclic) || g.order() != 3)
    throw std::invalid_argument("plugin_double: C must be over cube roots, got " + g.descriptor());
  if (c.rows() != c.cols()) throw std::invalid_argument("plugin_double: C must be square");
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Entry x = c(i, j);
      if (i == j && !x.is_zero())
        throw std::invalid_argument("plugin_double: diagonal entry " + std::to_string(i) + " is not the design-zero");
      if (i != j && !x.is_element())
        throw std::invalid_argument("plugin_double: off-diagonal entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not a cube root");
    }
  // w^k = z^(2k) and -w^k = z^(2k+3) with z a primitive sixth root.
  auto plus = [&](std::size_t i, std::size_t j) { return 2 * c(i, j).index() % 6; };
  const bool transposed = adjoint == PluginAdjoint::conjugate_transpose;
  auto minus_adj = [&](std::size_t i, std::size_t j) {
    return (9 - 2 * (transposed ? c(j, i) : c(i, j)).index()) % 6;
  };
  std::vector<Entry> cells(4 * n * n);
  auto put = [&](std::size_t r, std::size_t col, int k) { cells[r * 2 * n + col] = Entry::element(k); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        put(i, j, 0);
        put(i, n + j, 0);
        put(n + i, j, 0);
        put(n + i, n + j, 3);
        continue;
      }
      put(i, j, plus(i, j));
      put(i, n + j, (plus(i, j) + 3) % 6);
      put(n + i, j, minus_adj(i, j));
      put(n + i, n + j, minus_adj(i, j));
    }
  GMatrix m(Group::roots(6), 2 * n, 2 * n, std::move(cells));
  auto report = verify_butson(m, 6);
  return {std::move(m), std::move(report)};
}

}  // namespace groupmat
