#include <algorithm>
#include <map>
#include <stdexcept>

#include "groupmat/verify.hpp"

namespace groupmat {

namespace {

// Most frequent value; ties go to the smaller one.
std::size_t modal(const std::map<std::size_t, std::size_t>& histogram) {
  std::size_t best = 0, best_count = 0;
  for (auto [value, count] : histogram)
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  return best;
}

class QuotientTable {
 public:
  QuotientTable(const Group& g, QuotientConvention c) : order_(g.order()), table_(order_ * order_) {
    for (int x = 0; x < order_; ++x)
      for (int y = 0; y < order_; ++y)
        table_[x * order_ + y] = c == QuotientConvention::right ? g.mul(x, g.inv(y)) : g.mul(g.inv(y), x);
  }
  int operator()(int x, int y) const { return table_[x * order_ + y]; }

 private:
  int order_;
  std::vector<int> table_;
};

}  // namespace

std::string_view convention_name(QuotientConvention c) noexcept {
  return c == QuotientConvention::right ? "x*y^-1" : "y^-1*x";
}

GroupRingVector pair_quotients(const GMatrix& m, std::size_t i, std::size_t j, QuotientConvention convention) {
  const Group& g = *m.group();
  GroupRingVector out(m.group());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Entry x = m(i, c), y = m(j, c);
    if (!x.is_element() || !y.is_element()) continue;
    out.add(convention == QuotientConvention::right ? g.mul(x.index(), g.inv(y.index()))
                                                    : g.mul(g.inv(y.index()), x.index()));
  }
  return out;
}

VerificationReport verify_balance(const GMatrix& m, const BalanceOptions& options) {
  if (m.has_wildcards()) throw std::invalid_argument("verify_balance: wildcard entries present");
  const Group& g = *m.group();
  const int order = g.order();
  VerificationReport report;
  report.property = "balance";
  report.set_param("group", "\"" + g.descriptor() + "\"");
  report.set_param("convention", std::string(convention_name(options.convention)));

  const std::size_t limit = std::max<std::size_t>(1, options.max_failures);
  auto full = [&] {
    if (report.failures.size() < limit) return false;
    report.truncated = true;
    return true;
  };

  // Row weights (number of nonzero entries).
  std::vector<std::size_t> weights(m.rows(), 0);
  std::map<std::size_t, std::size_t> weight_hist;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Entry e : m.row(r)) weights[r] += e.is_element() ? 1 : 0;
    ++weight_hist[weights[r]];
  }
  const std::size_t weight = modal(weight_hist);
  report.set_param("weight", std::to_string(weight));
  for (std::size_t r = 0; r < m.rows() && !full(); ++r)
    if (weights[r] != weight)
      report.add_failure({FailureScope::row, r, 0, std::to_string(weight), std::to_string(weights[r]), "weight"});

  // Pair multisets. Two passes: overlaps first to fix the reference, then
  // the multiset comparison.
  const QuotientTable quotient(g, options.convention);
  std::map<std::size_t, std::size_t> overlap_hist;
  const bool dense = !m.has_zeros();
  if (dense) {
    if (m.rows() > 1) overlap_hist[m.cols()] = 1;
  } else {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.rows(); ++j) {
        std::size_t overlap = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) overlap += (m(i, c).is_element() && m(j, c).is_element()) ? 1 : 0;
        ++overlap_hist[overlap];
      }
  }
  const std::size_t overlap = modal(overlap_hist);
  const bool divisible = overlap % static_cast<std::size_t>(order) == 0;
  const std::int64_t mu = divisible ? static_cast<std::int64_t>(overlap / order) : -1;
  report.set_param("lambda", divisible ? std::to_string(mu) : "none");
  report.set_param("overlap", std::to_string(overlap));
  report.set_param("pairs", std::to_string(m.rows() < 2 ? 0 : m.rows() * (m.rows() - 1) / 2));

  GroupRingVector expected(m.group());
  if (divisible)
    for (int e = 0; e < order; ++e) expected.add(e, mu);
  const std::string expected_text =
      divisible ? expected.to_multiset_string()
                : "uniform(overlap " + std::to_string(overlap) + " not divisible by " + std::to_string(order) + ")";

  std::vector<std::int64_t> counts(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < m.rows() && !full(); ++i) {
    for (std::size_t j = i + 1; j < m.rows() && !full(); ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      bool ok = divisible;
      auto ri = m.row(i), rj = m.row(j);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!ri[c].is_element() || !rj[c].is_element()) continue;
        if (++counts[quotient(ri[c].index(), rj[c].index())] > mu) ok = false;
      }
      if (ok)
        for (auto cnt : counts)
          if (cnt != mu) ok = false;
      if (ok) continue;
      GroupRingVector actual(m.group(), counts);
      std::string detail;
      if (divisible) detail = "deficiency=" + (actual - expected).to_multiset_string();
      report.add_failure({FailureScope::pair, i, j, expected_text, actual.to_multiset_string(), detail});
    }
  }
  report.finish();
  return report;
}

}  // namespace groupmat
