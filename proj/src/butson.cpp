#include <stdexcept>

#include "groupmat/cyclotomic.hpp"
#include "groupmat/verify.hpp"

namespace groupmat {

namespace {

std::string poly_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!out.empty()) out += p[k] < 0 ? "-" : "+";
    else if (p[k] < 0) out += "-";
    const auto mag = p[k] < 0 ? -p[k] : p[k];
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k > 0) out += "z^" + std::to_string(k);
  }
  return out;
}

}  // namespace

VerificationReport verify_butson(const GMatrix& m, std::optional<int> q_opt) {
  const Group& g = *m.group();
  if (g.kind() != GroupKind::cyclic && g.kind() != GroupKind::roots)
    throw std::invalid_argument("verify_butson: entries must be roots of unity, got " + g.descriptor());
  if (m.has_zeros() || m.has_wildcards())
    throw std::invalid_argument("verify_butson: zero or wildcard entries present");
  const int q = q_opt.value_or(g.order());
  if (q < 1 || q % g.order() != 0)
    throw std::invalid_argument("verify_butson: group of order " + std::to_string(g.order()) +
                                " does not embed in the " + std::to_string(q) + "-th roots of unity");
  const int scale = q / g.order();
  const Poly phi = cyclotomic_polynomial(q);
  const auto n = static_cast<std::int64_t>(m.cols());

  VerificationReport report;
  report.property = "butson";
  report.set_param("q", std::to_string(q));
  report.set_param("n", std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  report.set_param("gram", std::to_string(n) + "I");

  std::vector<CyclotomicInt> row_roots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) row_roots.push_back(CyclotomicInt::root(q, m(i, k).index() * scale));
  }
  auto at = [&](std::size_t i, std::size_t k) -> const CyclotomicInt& { return row_roots[i * m.cols() + k]; };

  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      CyclotomicInt gram(q);
      for (std::size_t k = 0; k < m.cols(); ++k) gram += at(i, k) * at(j, k).conj();
      const CyclotomicInt target = CyclotomicInt::integer(q, i == j ? n : 0);
      const CyclotomicInt diff = gram - target;
      if (diff.is_zero(phi)) continue;
      report.add_failure({FailureScope::pair, i, j, i == j ? std::to_string(n) : "0",
                          poly_text(gram.reduced(phi)), "gram-raw=" + gram.to_string()});
    }
  }
  report.finish();
  return report;
}

}  // namespace groupmat
