#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "groupmat/verify.hpp"

namespace groupmat {

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> names = {"balance", "butson", "real",  "complex", "quaternion",
                                                 "cretan",  "bibd",   "sbibd", "brd"};
  return names;
}

bool is_known_property(std::string_view property) noexcept {
  const auto& names = known_properties();
  return std::find(names.begin(), names.end(), property) != names.end();
}

std::optional<std::size_t> Claim::number(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k != key) continue;
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      throw std::invalid_argument("claim parameter " + k + "=" + v + " is not a number");
    return out;
  }
  return std::nullopt;
}

std::string Claim::to_string() const {
  std::string out = property;
  for (const auto& [k, v] : params) out += " " + k + "=" + v;
  return out;
}

Claim parse_claim(std::string_view text) {
  std::istringstream in{std::string(text)};
  Claim claim;
  if (!(in >> claim.property)) throw std::invalid_argument("empty property claim");
  if (!is_known_property(claim.property)) throw std::invalid_argument("unknown property '" + claim.property + "'");
  std::string word;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == word.size())
      throw std::invalid_argument("expected key=value in claim, got '" + word + "'");
    claim.params.emplace_back(word.substr(0, eq), word.substr(eq + 1));
  }
  return claim;
}

VerificationReport verify_claim(const GMatrix& m, const Claim& claim, const BalanceOptions& options) {
  const auto& p = claim.property;
  if (p == "balance") return verify_balance(m, options);
  if (p == "butson") {
    const auto q = claim.number("q");
    return verify_butson(m, q ? std::optional<int>(static_cast<int>(*q)) : std::nullopt);
  }
  if (p == "real") return verify_numeric(m, NumericKind::real);
  if (p == "complex") return verify_numeric(m, NumericKind::complex);
  if (p == "quaternion") return verify_numeric(m, NumericKind::quaternion);
  if (p == "cretan") return verify_numeric(m, NumericKind::cretan);

  DesignParams d;
  d.v = claim.number("v");
  d.b = claim.number("b");
  d.r = claim.number("r");
  d.k = claim.number("k");
  d.lambda = claim.number("lambda");
  if (p == "bibd") return verify_block_design(flatten(m), d);
  if (p == "sbibd") {
    d.symmetric = true;
    return verify_block_design(flatten(m), d);
  }
  if (p == "brd") {
    d.symmetric = m.rows() == m.cols();
    if (d.symmetric && !d.r) d.r = d.k;
    return verify_bhaskar_rao(m, d, options);
  }
  throw std::invalid_argument("unknown property '" + p + "'");
}

}  // namespace groupmat
