#include <stdexcept>

#include "groupmat/verify.hpp"

namespace groupmat {

IncidenceMatrix flatten(const GMatrix& m) {
  if (m.has_wildcards()) throw std::invalid_argument("flatten: wildcard entries have no incidence value");
  IncidenceMatrix out{m.rows(), m.cols(), {}};
  out.cells.reserve(m.entries().size());
  for (Entry e : m.entries()) out.cells.push_back(e.is_element() ? 1 : 0);
  return out;
}

IncidenceMatrix flatten(const NumericMatrix& m) {
  IncidenceMatrix out{m.rows, m.cols, {}};
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    const auto& x = m.entries[i];
    if (!x || !x->is_real() || (x->re != 0 && x->re != m.denominator))
      throw std::invalid_argument("flatten: entry (" + std::to_string(i / m.cols) + "," + std::to_string(i % m.cols) +
                                  ") is not 0 or 1");
    out.cells.push_back(x->re == 0 ? 0 : 1);
  }
  return out;
}

VerificationReport verify_block_design(const IncidenceMatrix& m, const DesignParams& params) {
  VerificationReport report;
  report.property = params.symmetric ? "sbibd" : "bibd";
  auto row_sum = [&](std::size_t r) {
    std::size_t s = 0;
    for (std::size_t c = 0; c < m.cols; ++c) s += m(r, c);
    return s;
  };
  auto col_sum = [&](std::size_t c) {
    std::size_t s = 0;
    for (std::size_t r = 0; r < m.rows; ++r) s += m(r, c);
    return s;
  };
  auto row_inner = [&](std::size_t a, std::size_t b) {
    std::size_t s = 0;
    for (std::size_t c = 0; c < m.cols; ++c) s += m(a, c) & m(b, c);
    return s;
  };
  auto col_inner = [&](std::size_t a, std::size_t b) {
    std::size_t s = 0;
    for (std::size_t r = 0; r < m.rows; ++r) s += m(r, a) & m(r, b);
    return s;
  };

  const std::size_t r = params.r.value_or(m.rows ? row_sum(0) : 0);
  const std::size_t k = params.k.value_or(m.cols ? col_sum(0) : 0);
  const std::size_t lambda = params.lambda.value_or(m.rows > 1 ? row_inner(0, 1) : 0);
  report.set_param("v", std::to_string(m.rows));
  report.set_param("b", std::to_string(m.cols));
  report.set_param("r", std::to_string(r));
  report.set_param("k", std::to_string(k));
  report.set_param("lambda", std::to_string(lambda));

  if (params.v && *params.v != m.rows)
    report.add_failure({FailureScope::shape, 0, 0, "v=" + std::to_string(*params.v), "v=" + std::to_string(m.rows), ""});
  if (params.b && *params.b != m.cols)
    report.add_failure({FailureScope::shape, 1, 0, "b=" + std::to_string(*params.b), "b=" + std::to_string(m.cols), ""});
  if (params.symmetric && m.rows != m.cols)
    report.add_failure({FailureScope::shape, 2, 0, "v=b", std::to_string(m.rows) + "x" + std::to_string(m.cols), ""});

  for (std::size_t i = 0; i < m.rows; ++i)
    if (auto s = row_sum(i); s != r) report.add_failure({FailureScope::row, i, 0, std::to_string(r), std::to_string(s), "sum"});
  for (std::size_t c = 0; c < m.cols; ++c)
    if (auto s = col_sum(c); s != k)
      report.add_failure({FailureScope::column, c, 0, std::to_string(k), std::to_string(s), "sum"});
  for (std::size_t a = 0; a < m.rows; ++a)
    for (std::size_t b = a + 1; b < m.rows; ++b)
      if (auto s = row_inner(a, b); s != lambda)
        report.add_failure({FailureScope::pair, a, b, std::to_string(lambda), std::to_string(s), "inner"});
  if (params.symmetric)
    for (std::size_t a = 0; a < m.cols; ++a)
      for (std::size_t b = a + 1; b < m.cols; ++b)
        if (auto s = col_inner(a, b); s != lambda)
          report.add_failure({FailureScope::column_pair, a, b, std::to_string(lambda), std::to_string(s), "inner"});
  report.finish();
  return report;
}

VerificationReport verify_bhaskar_rao(const GMatrix& m, const DesignParams& params, const BalanceOptions& options) {
  VerificationReport report = verify_block_design(flatten(m), params);
  const VerificationReport balance = verify_balance(m, options);
  report.property = "brd";
  report.set_param("design", params.symmetric ? "sbibd" : "bibd");
  for (const auto& [k, v] : balance.params)
    if (k != "weight" && k != "overlap") report.set_param("balance." + k, v);
  for (auto f : balance.failures) {
    f.detail = f.detail.empty() ? "balance" : "balance " + f.detail;
    report.add_failure(std::move(f));
  }
  report.truncated = balance.truncated;
  report.finish();
  return report;
}

}  // namespace groupmat
