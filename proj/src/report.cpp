#include <algorithm>

#include "groupmat/verify.hpp"

namespace groupmat {

namespace {

std::string_view scope_name(FailureScope s) {
  switch (s) {
    case FailureScope::shape:
      return "shape";
    case FailureScope::entry:
      return "entry";
    case FailureScope::row:
      return "row";
    case FailureScope::column:
      return "column";
    case FailureScope::pair:
      return "pair";
    case FailureScope::column_pair:
      return "column-pair";
  }
  return "?";
}

bool has_second(FailureScope s) { return s != FailureScope::row && s != FailureScope::column; }

}  // namespace

std::string VerificationReport::param(std::string_view key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return {};
}

void VerificationReport::set_param(std::string key, std::string value) {
  for (auto& [k, v] : params)
    if (k == key) {
      v = std::move(value);
      return;
    }
  params.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_failure(Failure f) {
  failures.push_back(std::move(f));
  pass = false;
}

void VerificationReport::finish() {
  std::stable_sort(failures.begin(), failures.end(),
                   [](const Failure& a, const Failure& b) { return a.key() < b.key(); });
  pass = failures.empty();
}

std::string VerificationReport::to_text() const {
  std::string out = "verdict=" + std::string(pass ? "pass" : "fail") + " property=" + property;
  for (const auto& [k, v] : params) out += " " + k + "=" + v;
  out += " failures=" + std::to_string(failures.size());
  if (truncated) out += "+ truncated";
  out += '\n';
  for (const auto& f : failures) {
    out += std::string(scope_name(f.scope)) + " " + std::to_string(f.first);
    if (has_second(f.scope)) out += " " + std::to_string(f.second);
    if (!f.expected.empty()) out += " expected=" + f.expected;
    if (!f.actual.empty()) out += " actual=" + f.actual;
    if (!f.detail.empty()) out += " " + f.detail;
    out += '\n';
  }
  return out;
}

}  // namespace groupmat
