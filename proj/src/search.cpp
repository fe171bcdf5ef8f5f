#include "groupmat/search.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "groupmat/verify.hpp"

namespace groupmat {

namespace {

using Json = nlohmann::json;

// A result as raw cells: element index, or -1 for the design-zero.
using Flat = std::vector<int>;

struct UnitOutput {
  std::vector<Flat> results;
  std::uint64_t nodes = 0;
  bool capped = false;
};

struct MergedRun {
  std::vector<Flat> results;
  bool truncated = false;
};

Entry to_entry(int raw) { return raw < 0 ? Entry::zero() : Entry::element(raw); }

std::vector<int> quotient_table(const Group& g) {
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = g.mul(x, g.inv(y));
  return table;
}

class Checkpoint {
 public:
  Checkpoint(std::string path, Json identity, std::size_t units)
      : path_(std::move(path)), identity_(std::move(identity)), units_(units) {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    Json doc = Json::parse(in);
    if (doc.at("search") != identity_ || doc.at("units").get<std::size_t>() != units_)
      throw std::invalid_argument("checkpoint " + path_ + " belongs to a different search");
    for (auto& [key, unit] : doc.at("completed").items()) {
      UnitOutput out;
      out.nodes = unit.at("nodes").get<std::uint64_t>();
      out.capped = unit.at("capped").get<bool>();
      out.results = unit.at("results").get<std::vector<Flat>>();
      done_.emplace(std::stoul(key), std::move(out));
    }
  }

  bool enabled() const { return !path_.empty(); }
  const std::map<std::size_t, UnitOutput>& done() const { return done_; }

  void record(std::size_t unit, const UnitOutput& out) {
    done_[unit] = out;
    if (!enabled()) return;
    Json doc;
    doc["search"] = identity_;
    doc["units"] = units_;
    doc["completed"] = Json::object();
    std::size_t prefix = 0;
    while (done_.count(prefix)) ++prefix;
    doc["completed_prefix"] = prefix;
    for (const auto& [i, u] : done_)
      doc["completed"][std::to_string(i)] = {{"nodes", u.nodes}, {"capped", u.capped}, {"results", u.results}};
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp);
      out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::string path_;
  Json identity_;
  std::size_t units_;
  std::map<std::size_t, UnitOutput> done_;
};

// Runs units 0..units-1 and concatenates their results in unit order, up to
// `limit`. Units past the point where the completed prefix already holds
// `limit` results are skipped.
MergedRun run_units(std::size_t units, const std::function<UnitOutput(std::size_t)>& run, const Partition& p,
                    const Json& identity, std::size_t limit, SearchStats& stats) {
  Checkpoint checkpoint(p.checkpoint, identity, units);
  stats.units = units;
  stats.units_resumed = checkpoint.done().size();

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto prefix_satisfied = [&] {
    std::size_t found = 0;
    for (std::size_t i = 0; i < units; ++i) {
      auto it = checkpoint.done().find(i);
      if (it == checkpoint.done().end()) return false;
      found += it->second.results.size();
      if (found >= limit || it->second.capped) return true;
    }
    return true;
  };
  if (prefix_satisfied()) stop = true;

  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= units) return;
      {
        std::lock_guard lock(mu);
        if (checkpoint.done().count(i)) continue;
      }
      UnitOutput out = run(i);
      std::lock_guard lock(mu);
      checkpoint.record(i, out);
      if (prefix_satisfied()) stop = true;
    }
  };
  const unsigned jobs = std::max(1u, p.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  MergedRun merged;
  for (std::size_t i = 0; i < units; ++i) {
    auto it = checkpoint.done().find(i);
    if (it == checkpoint.done().end()) {
      merged.truncated = true;
      break;
    }
    stats.nodes += it->second.nodes;
    for (const auto& r : it->second.results) {
      if (merged.results.size() == limit) {
        merged.truncated = true;
        break;
      }
      merged.results.push_back(r);
    }
    if (it->second.capped) merged.truncated = true;
    if (merged.truncated) break;
  }
  return merged;
}

std::size_t unit_count(std::size_t alphabet, std::size_t depth) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / alphabet) throw std::invalid_argument("partition depth too large");
    n *= alphabet;
  }
  return n;
}

// Digits of `unit` in base `alphabet`, most significant first.
std::vector<int> unit_digits(std::size_t unit, std::size_t alphabet, std::size_t depth) {
  std::vector<int> digits(depth);
  for (std::size_t i = depth; i-- > 0;) {
    digits[i] = static_cast<int>(unit % alphabet);
    unit /= alphabet;
  }
  return digits;
}

// -- GH backtracking --------------------------------------------------------------

class GhSearcher {
 public:
  GhSearcher(const Group& g, std::size_t v, bool normalized, std::size_t cap)
      : order_(g.order()),
        v_(v),
        mu_(static_cast<int>(v) / g.order()),
        cap_(cap),
        quot_(quotient_table(g)),
        cells_(v * v, 0),
        counts_(v * v * static_cast<std::size_t>(order_), 0) {
    for (std::size_t cell = 0; cell < v * v; ++cell) {
      const bool fixed = normalized && (cell < v || cell % v == 0);
      if (!fixed) free_.push_back(cell);
      fixed_.push_back(fixed);
    }
  }

  const std::vector<std::size_t>& free_cells() const { return free_; }

  UnitOutput run(const std::vector<int>& prefix) {
    out_ = {};
    prefix_ = prefix;
    dfs(0, 0);
    return std::move(out_);
  }

 private:
  // Places val at cell, updating pair counts; false (with counts restored)
  // when some multiplicity would exceed mu.
  bool place(std::size_t cell, int val) {
    const std::size_t r = cell / v_, c = cell % v_;
    for (std::size_t s = 0; s < r; ++s) {
      const int q = quot_[cells_[s * v_ + c] * order_ + val];
      if (++counts_[(s * v_ + r) * order_ + q] > mu_) {
        for (std::size_t t = 0; t <= s; ++t) --counts_[(t * v_ + r) * order_ + quot_[cells_[t * v_ + c] * order_ + val]];
        return false;
      }
    }
    cells_[cell] = val;
    return true;
  }

  void unplace(std::size_t cell) {
    const std::size_t r = cell / v_, c = cell % v_;
    const int val = cells_[cell];
    for (std::size_t s = 0; s < r; ++s) --counts_[(s * v_ + r) * order_ + quot_[cells_[s * v_ + c] * order_ + val]];
  }

  void dfs(std::size_t cell, std::size_t free_index) {
    if (out_.capped) return;
    if (cell == v_ * v_) {
      if (out_.results.size() == cap_) {
        out_.capped = true;
        return;
      }
      out_.results.push_back(cells_);
      return;
    }
    if (fixed_[cell]) {
      if (!place(cell, 0)) return;
      ++out_.nodes;
      dfs(cell + 1, free_index);
      unplace(cell);
      return;
    }
    int lo = 0, hi = order_ - 1;
    if (free_index < prefix_.size()) lo = hi = prefix_[free_index];
    for (int val = lo; val <= hi; ++val) {
      if (!place(cell, val)) continue;
      ++out_.nodes;
      dfs(cell + 1, free_index + 1);
      unplace(cell);
    }
  }

  int order_;
  std::size_t v_;
  int mu_;
  std::size_t cap_;
  std::vector<int> quot_;
  std::vector<int> cells_;
  std::vector<int> counts_;
  std::vector<std::size_t> free_;
  std::vector<bool> fixed_;
  std::vector<int> prefix_;
  UnitOutput out_;
};

// -- circulant GW -------------------------------------------------------------------

class GwSearcher {
 public:
  GwSearcher(const Group& g, std::size_t v, std::size_t k, std::size_t lambda, std::size_t cap)
      : order_(g.order()),
        v_(v),
        k_(k),
        half_(v / 2),
        mu_(static_cast<int>(lambda) / g.order()),
        cap_(cap),
        quot_(quotient_table(g)),
        row_(v, -1),
        counts_((half_ + 1) * static_cast<std::size_t>(order_), 0) {
    fixed_zero_ = k + 1 == v;
    for (std::size_t p = fixed_zero_ ? 1 : 0; p < v; ++p) free_.push_back(p);
  }

  // Symbols per free position: the zero (if any may still be placed) and
  // the group elements.
  std::size_t alphabet() const { return static_cast<std::size_t>(order_) + (fixed_zero_ || k_ == v_ ? 0 : 1); }
  const std::vector<std::size_t>& free_positions() const { return free_; }

  UnitOutput run(const std::vector<int>& prefix) {
    out_ = {};
    prefix_ = prefix;
    zeros_ = 0;
    std::fill(counts_.begin(), counts_.end(), 0);
    if (fixed_zero_) {
      row_[0] = -1;
      zeros_ = 1;
    }
    dfs(0);
    return std::move(out_);
  }

 private:
  template <typename F>
  void for_pairs(std::size_t p, F&& f) {
    for (std::size_t d = 1; d <= half_; ++d) {
      if (p >= d) f(d, row_[p], row_[p - d]);
      if (p + d >= v_) f(d, row_[p + d - v_], row_[p]);
    }
  }

  bool place(std::size_t p, int val) {
    row_[p] = val;
    if (val < 0) return true;
    bool ok = true;
    for_pairs(p, [&](std::size_t d, int x, int y) {
      if (x < 0 || y < 0) return;
      if (++counts_[d * order_ + quot_[x * order_ + y]] > mu_) ok = false;
    });
    if (!ok) unplace(p);
    return ok;
  }

  void unplace(std::size_t p) {
    if (row_[p] >= 0)
      for_pairs(p, [&](std::size_t d, int x, int y) {
        if (x >= 0 && y >= 0) --counts_[d * order_ + quot_[x * order_ + y]];
      });
    row_[p] = -1;
  }

  bool balanced() const {
    for (std::size_t d = 1; d <= half_; ++d)
      for (int g = 0; g < order_; ++g)
        if (counts_[d * order_ + g] != mu_) return false;
    return true;
  }

  void dfs(std::size_t i) {
    if (out_.capped) return;
    if (i == free_.size()) {
      if (!balanced()) return;
      if (out_.results.size() == cap_) {
        out_.capped = true;
        return;
      }
      out_.results.push_back(row_);
      return;
    }
    const std::size_t p = free_[i];
    const std::size_t max_zeros = v_ - k_;
    const std::size_t remaining = free_.size() - i;  // including p
    const bool zero_allowed = zeros_ < max_zeros;
    const bool zero_forced = max_zeros - zeros_ == remaining;
    const int alpha = static_cast<int>(alphabet());
    const int shift = alpha - order_;  // 1 when symbol 0 is the zero
    int lo = 0, hi = alpha - 1;
    if (i < prefix_.size()) lo = hi = prefix_[i];
    for (int sym = lo; sym <= hi; ++sym) {
      const int val = sym - shift;  // -1 is the zero
      if (val < 0 && !zero_allowed) continue;
      if (val >= 0 && zero_forced) continue;
      if (!place(p, val)) continue;
      ++out_.nodes;
      if (val < 0) ++zeros_;
      dfs(i + 1);
      if (val < 0) --zeros_;
      unplace(p);
    }
  }

  int order_;
  std::size_t v_, k_, half_;
  int mu_;
  std::size_t cap_;
  std::vector<int> quot_;
  std::vector<int> row_;
  std::vector<int> counts_;
  std::vector<std::size_t> free_;
  bool fixed_zero_ = false;
  std::size_t zeros_ = 0;
  std::vector<int> prefix_;
  UnitOutput out_;
};

}  // namespace

std::string_view outcome_name(SearchOutcome o) noexcept {
  switch (o) {
    case SearchOutcome::completed:
      return "completed";
    case SearchOutcome::limit_reached:
      return "limit-reached";
    case SearchOutcome::proven_empty:
      return "proven-empty";
  }
  return "?";
}

GhSearchResult search_gh_backtrack(const GhSearchSpec& spec) {
  if (!spec.group) throw std::invalid_argument("search_gh_backtrack: no group");
  const Group& g = *spec.group;
  if (spec.v == 0) throw std::invalid_argument("search_gh_backtrack: v must be positive");
  if (spec.v * static_cast<std::size_t>(g.order()) > spec.bound)
    throw std::invalid_argument("search_gh_backtrack: v*|G| = " + std::to_string(spec.v * g.order()) +
                                " exceeds the desk-scale bound " + std::to_string(spec.bound));
  GhSearchResult result;
  if (spec.v > 1 && spec.v % static_cast<std::size_t>(g.order()) != 0) {
    result.outcome = SearchOutcome::proven_empty;
    result.reason = "|G| = " + std::to_string(g.order()) + " does not divide the pair overlap " + std::to_string(spec.v);
    return result;
  }
  if (spec.limit == 0) {
    result.outcome = SearchOutcome::limit_reached;
    return result;
  }

  const std::size_t depth = std::min(spec.partition.depth, GhSearcher(g, spec.v, spec.normalized, 0).free_cells().size());
  const std::size_t alphabet = static_cast<std::size_t>(g.order());
  const std::size_t units = unit_count(alphabet, depth);
  const Json identity = {{"target", "balance-gh"}, {"v", spec.v},         {"group", g.descriptor()},
                         {"normalized", spec.normalized}, {"depth", depth}, {"limit", spec.limit}};
  auto run = [&](std::size_t unit) {
    GhSearcher s(g, spec.v, spec.normalized, spec.limit);
    return s.run(unit_digits(unit, alphabet, depth));
  };
  auto merged = run_units(units, run, spec.partition, identity, spec.limit, result.stats);
  result.outcome = merged.truncated ? SearchOutcome::limit_reached : SearchOutcome::completed;
  for (const auto& flat : merged.results) {
    std::vector<Entry> entries;
    entries.reserve(flat.size());
    for (int x : flat) entries.push_back(to_entry(x));
    GMatrix m(spec.group, spec.v, spec.v, std::move(entries));
    if (spec.v > 1 && !verify_balance(m).pass)
      throw std::logic_error("search_gh_backtrack: accepted matrix fails verify_balance");
    result.matrices.push_back(std::move(m));
  }
  return result;
}

GwSearchResult search_circulant_gw(const GwSearchSpec& spec) {
  if (!spec.group) throw std::invalid_argument("search_circulant_gw: no group");
  const Group& g = *spec.group;
  if (spec.v == 0) throw std::invalid_argument("search_circulant_gw: v must be positive");
  if (spec.k > spec.v)
    throw std::invalid_argument("search_circulant_gw: weight k = " + std::to_string(spec.k) + " exceeds v = " +
                                std::to_string(spec.v));
  GwSearchResult result;
  const std::size_t v = spec.v, k = spec.k;
  if (v > 1) {
    if ((k * (k - (k > 0 ? 1 : 0))) % (v - 1) != 0) {
      result.outcome = SearchOutcome::proven_empty;
      result.reason = "k(k-1)/(v-1) = " + std::to_string(k * (k > 0 ? k - 1 : 0)) + "/" + std::to_string(v - 1) +
                      " is not an integer";
      return result;
    }
    result.lambda = k * (k > 0 ? k - 1 : 0) / (v - 1);
    if (result.lambda % static_cast<std::size_t>(g.order()) != 0) {
      result.outcome = SearchOutcome::proven_empty;
      result.reason = "|G| = " + std::to_string(g.order()) + " does not divide the pair overlap " +
                      std::to_string(result.lambda);
      return result;
    }
  }
  if (spec.limit == 0) {
    result.outcome = SearchOutcome::limit_reached;
    return result;
  }

  const GwSearcher probe(g, v, k, result.lambda, 0);
  const std::size_t depth = std::min(spec.partition.depth, probe.free_positions().size());
  const std::size_t alphabet = probe.alphabet();
  const std::size_t units = unit_count(alphabet, depth);
  const Json identity = {{"target", "circulant-gw"}, {"v", v},         {"k", k},
                         {"group", g.descriptor()},  {"depth", depth}, {"limit", spec.limit}};
  auto run = [&](std::size_t unit) {
    GwSearcher s(g, v, k, result.lambda, spec.limit);
    return s.run(unit_digits(unit, alphabet, depth));
  };
  auto merged = run_units(units, run, spec.partition, identity, spec.limit, result.stats);
  result.outcome = merged.truncated ? SearchOutcome::limit_reached : SearchOutcome::completed;
  for (const auto& flat : merged.results) {
    std::vector<Entry> row;
    for (int x : flat) row.push_back(to_entry(x));
    if (v > 1 && !verify_balance(circulant(spec.group, row)).pass)
      throw std::logic_error("search_circulant_gw: accepted row fails verify_balance");
    result.first_rows.push_back(std::move(row));
  }
  return result;
}

GMatrix normalize_matrix(const GMatrix& m) {
  const Group& g = *m.group();
  if (!g.is_abelian()) throw std::invalid_argument("normalize_matrix: " + g.descriptor() + " is not abelian");
  if (m.has_zeros() || m.has_wildcards())
    throw std::invalid_argument("normalize_matrix: zero or wildcard entries present");
  std::vector<Entry> cells(m.entries());
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols; ++c) {
    const int top = g.inv(cells[c].index());
    for (std::size_t r = 0; r < rows; ++r) cells[r * cols + c] = Entry::element(g.mul(cells[r * cols + c].index(), top));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const int left = g.inv(cells[r * cols].index());
    for (std::size_t c = 0; c < cols; ++c) cells[r * cols + c] = Entry::element(g.mul(left, cells[r * cols + c].index()));
  }
  return GMatrix(m.group(), rows, cols, std::move(cells));
}

}  // namespace groupmat
