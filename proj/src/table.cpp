#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "groupmat/constructions.hpp"

namespace groupmat {

namespace {

constexpr std::string_view kListing[] = {
    "H(2;Z2) exists",   "GH(3;Z3) exists",  "H(4;Z2) exists",  "NE",
    "GH(6;Z3) exists",  "GH(7;Z6)",         "H(8;Z2) exists",  "3 x 3",
    "GH(10;Z3)",        "NE",               "H(12;Z2) exists", "NE",
    "7 x 2",            "NE",               "H(12;Z2) exists", "NE",
    "3 x 3 x 2",        "?",                "10 x 2",          "GH(7;Z3)",
    "?",                "NE",               "H(24;Z2) exists", "?",
    "?",                "3 x 3 x 3",        "H(28;Z2) exists", "NE",
    "10 x 3",           "?",                "H(32;Z2) exists", "NE",
    "GW(17,16,15;Z3) exists", "NE",         "H(36;Z2) exists", "?",
    "?",                "?",                "10 x 4",          "NE",
    "7 x 6",            "?",                "H(44;Z2) exists", "NE",
    "?",                "NE",               "H(48;Z2) exists", "7 x 7",
    "?",                "?",                "H(52;Z2) exists",
};

constexpr int kBases[] = {10, 7, 6, 4, 3, 2};

// Factors written "a x b x c" in the listing, if every factor is a base.
std::optional<std::vector<int>> listed_factors(std::string_view listed) {
  if (listed.find(" x ") == std::string_view::npos) return std::nullopt;
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= listed.size()) {
    auto end = listed.find(" x ", pos);
    if (end == std::string_view::npos) end = listed.size();
    out.push_back(std::stoi(std::string(listed.substr(pos, end - pos))));
    pos = end + 3;
  }
  for (int f : out)
    if (std::find(std::begin(kBases), std::end(kBases), f) == std::end(kBases)) return std::nullopt;
  return out;
}

// Fewest factors over the bases; among those the lexicographically largest
// non-increasing sequence.
std::optional<std::vector<int>> minimal_factors(int n) {
  std::optional<std::vector<int>> best;
  std::vector<int> cur;
  std::function<void(int, std::size_t)> go = [&](int rest, std::size_t from) {
    if (rest == 1) {
      if (!cur.empty() && (!best || cur.size() < best->size() || (cur.size() == best->size() && cur > *best)))
        best = cur;
      return;
    }
    if (best && cur.size() >= best->size()) return;
    for (std::size_t i = from; i < std::size(kBases); ++i)
      if (rest % kBases[i] == 0) {
        cur.push_back(kBases[i]);
        go(rest / kBases[i], i);
        cur.pop_back();
      }
  };
  go(n, 0);
  return best;
}

struct Base {
  std::string name;
  GMatrix matrix;
};

class BaseLibrary {
 public:
  const Base& get(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, load(n)).first;
    return it->second;
  }

 private:
  static Base load(int n) {
    const auto sixth = Group::roots(6);
    auto from_catalog = [&](const char* name) { return Base{name, embed(catalog_get(name).matrix, sixth)}; };
    switch (n) {
      case 2:
        return from_catalog("bh2");
      case 3:
        return from_catalog("butson3");
      case 4:
        return from_catalog("h4");
      case 6:
        return from_catalog("gh6-z3");
      case 7:
        return from_catalog("gh7-z6-a");
      case 10: {
        for (const auto& cand : build_gh10_z6())
          if (cand.report.pass) return Base{"gh10 " + cand.label(), cand.matrix};
        return from_catalog("gh10-z6-erratum");
      }
      case 34:
        return Base{"plugin-double(gw17-z3)", plugin_double(catalog_get("gw17-z3").matrix).matrix};
      default:
        throw std::logic_error("no table base of order " + std::to_string(n));
    }
  }

  std::map<int, Base> cache_;
};

}  // namespace

std::string_view table_status_name(TableStatus s) noexcept {
  switch (s) {
    case TableStatus::constructed_verified:
      return "constructed+verified";
    case TableStatus::construction_failed:
      return "construction-failed";
    case TableStatus::listed_ne:
      return "listed-NE";
    case TableStatus::listed_unknown:
      return "listed-unknown";
    case TableStatus::not_attempted:
      return "not-attempted";
  }
  return "?";
}

std::string_view table_listing(int n) {
  if (n < 2 || n > 52) throw std::out_of_range("table_listing: n must lie in 2..52");
  return kListing[n - 2];
}

std::vector<TableRow> build_table(int from, int to) {
  if (from < 2 || to > 52 || from > to) throw std::invalid_argument("build_table: range must lie in 2..52");
  BaseLibrary bases;
  std::vector<TableRow> out;
  for (int n = from; n <= to; ++n) {
    TableRow row;
    row.n = n;
    row.listed = std::string(table_listing(n));
    if (row.listed == "NE") {
      row.status = TableStatus::listed_ne;
      out.push_back(std::move(row));
      continue;
    }
    if (row.listed == "?") {
      row.status = TableStatus::listed_unknown;
      out.push_back(std::move(row));
      continue;
    }
    std::optional<std::vector<int>> factors;
    if (n == 34) factors = std::vector<int>{34};
    else if (!(factors = listed_factors(row.listed))) factors = minimal_factors(n);
    if (!factors) {
      row.status = TableStatus::not_attempted;
      row.recipe = "no factorization over catalog bases";
      out.push_back(std::move(row));
      continue;
    }
    std::optional<GMatrix> acc;
    for (int f : *factors) {
      const Base& b = bases.get(f);
      row.recipe += (row.recipe.empty() ? "" : " x ") + b.name;
      acc = acc ? kronecker_compose(*acc, b.matrix) : b.matrix;
    }
    if (n == 16) row.recipe += " (listing reads H(12;Z2); order 16 assumed)";
    row.report = verify_butson(*acc, 6);
    row.status = row.report->pass ? TableStatus::constructed_verified : TableStatus::construction_failed;
    row.witness = std::move(acc);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace groupmat
