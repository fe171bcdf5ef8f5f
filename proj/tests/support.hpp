#pragma once

// Generators and independent oracles shared by the unit, property and
// acceptance tests. Oracles use only the Group tables and std containers,
// never the verifier internals.

#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "groupmat/gmatrix.hpp"
#include "groupmat/verify.hpp"

namespace groupmat::testing {

using Rng = std::mt19937_64;

inline std::vector<GroupPtr> small_groups() {
  return {Group::cyclic(1),  Group::cyclic(2),  Group::cyclic(3),          Group::cyclic(4),
          Group::cyclic(5),  Group::cyclic(6),  Group::product({2, 2}),    Group::product({2, 3}),
          Group::s3(),       Group::s3(S3Presentation::a3b2), Group::q8(), Group::roots(6),
          Group::roots(4)};
}

inline GroupPtr random_group(Rng& rng) {
  static const auto groups = small_groups();
  return groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
}

/// Random matrix; each cell is the design-zero with probability zero_p.
inline GMatrix random_matrix(Rng& rng, GroupPtr g, std::size_t rows, std::size_t cols, double zero_p = 0.0) {
  std::uniform_int_distribution<int> pick(0, g->order() - 1);
  std::bernoulli_distribution zero(zero_p);
  std::vector<Entry> cells;
  for (std::size_t i = 0; i < rows * cols; ++i) cells.push_back(zero(rng) ? Entry::zero() : Entry::element(pick(rng)));
  return GMatrix(std::move(g), rows, cols, std::move(cells));
}

/// Random rows of the Cayley table of g, so every pair is balanced; half
/// the time one cell is then overwritten. Random cases hit both verdicts.
inline GMatrix near_balanced_matrix(Rng& rng, GroupPtr g, std::size_t rows) {
  const std::size_t n = static_cast<std::size_t>(g->order());
  std::vector<Entry> cells;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cells.push_back(Entry::element(g->mul(static_cast<int>(r), static_cast<int>(c))));
  GMatrix m(g, n, n, std::move(cells));
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  std::shuffle(pick.begin(), pick.end(), rng);
  std::vector<Entry> out;
  rows = std::min(rows, n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c) out.push_back(m(pick[r], c));
  GMatrix result(g, rows, n, std::move(out));
  if (std::bernoulli_distribution(0.5)(rng) && rows > 1) {
    std::uniform_int_distribution<std::size_t> rr(0, rows - 1), cc(0, n - 1);
    result = result.with(rr(rng), cc(rng), Entry::element(std::uniform_int_distribution<int>(0, g->order() - 1)(rng)));
  }
  return result;
}

struct BalanceOracle {
  bool pass = true;
  std::set<std::size_t> bad_rows;
  std::set<std::pair<std::size_t, std::size_t>> bad_pairs;
};

// Most frequent value, smaller wins ties.
inline std::size_t oracle_mode(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> h;
  for (auto v : values) ++h[v];
  std::size_t best = 0, count = 0;
  for (auto [v, c] : h)
    if (c > count) best = v, count = c;
  return best;
}

/// Dictionary-count balance check keyed by element token.
inline BalanceOracle balance_oracle(const GMatrix& m, QuotientConvention conv = QuotientConvention::right) {
  const Group& g = *m.group();
  BalanceOracle out;
  std::vector<std::size_t> weights;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t w = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) w += m(r, c).is_element();
    weights.push_back(w);
  }
  const std::size_t weight = oracle_mode(weights);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (weights[r] != weight) out.bad_rows.insert(r);

  std::vector<std::size_t> overlaps;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      std::size_t o = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) o += m(i, c).is_element() && m(j, c).is_element();
      overlaps.push_back(o);
    }
  const std::size_t overlap = overlaps.empty() ? m.cols() : oracle_mode(overlaps);
  const auto order = static_cast<std::size_t>(g.order());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      std::map<std::string, std::size_t> counts;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Entry x = m(i, c), y = m(j, c);
        if (!x.is_element() || !y.is_element()) continue;
        const int yi = g.inv(y.index());
        const int q = conv == QuotientConvention::right ? g.mul(x.index(), yi) : g.mul(yi, x.index());
        ++counts[g.token(q)];
      }
      bool ok = overlap % order == 0 && counts.size() == (overlap == 0 ? 0 : order);
      for (auto& [tok, n] : counts) ok = ok && n == overlap / order;
      if (!ok) out.bad_pairs.insert({i, j});
    }
  out.pass = out.bad_rows.empty() && out.bad_pairs.empty();
  return out;
}

inline std::set<std::pair<std::size_t, std::size_t>> failing_pairs(const VerificationReport& r) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& f : r.failures)
    if (f.scope == FailureScope::pair) out.insert({f.first, f.second});
  return out;
}

inline std::set<std::size_t> failing_rows(const VerificationReport& r) {
  std::set<std::size_t> out;
  for (const auto& f : r.failures)
    if (f.scope == FailureScope::row) out.insert(f.first);
  return out;
}

inline bool agrees(const VerificationReport& r, const BalanceOracle& o) {
  return r.pass == o.pass && failing_pairs(r) == o.bad_pairs && failing_rows(r) == o.bad_rows;
}

inline GMatrix permute_rows(const GMatrix& m, const std::vector<std::size_t>& p) {
  std::vector<Entry> cells;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cells.push_back(m(p[r], c));
  return GMatrix(m.group(), m.rows(), m.cols(), std::move(cells));
}

inline GMatrix permute_cols(const GMatrix& m, const std::vector<std::size_t>& p) {
  std::vector<Entry> cells;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cells.push_back(m(r, p[c]));
  return GMatrix(m.group(), m.rows(), m.cols(), std::move(cells));
}

/// Left-multiplies every element of row r by s[r]. Under the right
/// convention the quotients of rows i, j become s_i (x y^-1) s_j^-1, a
/// bijection of the group, so balance is unchanged.
inline GMatrix scale_rows(const GMatrix& m, const std::vector<int>& s) {
  const Group& g = *m.group();
  std::vector<Entry> cells;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Entry e = m(r, c);
      cells.push_back(e.is_element() ? Entry::element(g.mul(s[r], e.index())) : e);
    }
  return GMatrix(m.group(), m.rows(), m.cols(), std::move(cells));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Float value of sum_k c_k zeta_q^k.
inline std::complex<double> cyclo_value(int q, const std::vector<std::int64_t>& coeffs) {
  std::complex<double> acc = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += static_cast<double>(coeffs[k]) * std::polar(1.0, 2 * pi * static_cast<double>(k) / q);
  return acc;
}

/// Dense balance check with early exit; same verdict as balance_oracle on
/// matrices without zeros.
inline bool dense_balanced(const std::vector<int>& cells, std::size_t v, const Group& g) {
  const auto order = static_cast<std::size_t>(g.order());
  if (v > 1 && v % order != 0) return false;
  std::vector<std::size_t> counts(order);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t c = 0; c < v; ++c)
        if (++counts[static_cast<std::size_t>(g.mul(cells[i * v + c], g.inv(cells[j * v + c])))] > v / order)
          return false;
    }
  return true;
}

/// Every assignment of a v x v matrix over g, optionally with the identity
/// first row and column, kept when balanced. No pruning; results in
/// lexicographic row-major order.
inline std::vector<GMatrix> brute_force_gh(std::size_t v, const GroupPtr& g, bool normalized) {
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < v; ++r)
    for (std::size_t c = 0; c < v; ++c)
      if (!normalized || (r > 0 && c > 0)) free.push_back(r * v + c);
  const int order = g->order();
  std::vector<int> cells(v * v, 0);
  std::vector<GMatrix> out;
  while (true) {
    if (dense_balanced(cells, v, *g)) {
      std::vector<Entry> entries;
      for (int x : cells) entries.push_back(Entry::element(x));
      out.emplace_back(g, v, v, std::move(entries));
    }
    std::size_t i = free.size();
    while (true) {
      if (i == 0) return out;
      --i;
      if (++cells[free[i]] < order) break;
      cells[free[i]] = 0;
    }
  }
}

}  // namespace groupmat::testing
