#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "groupmat/gmatrix.hpp"

namespace groupmat {

/// How a search is split and run. The first `depth` free cells, in
/// enumeration order, define the work units; units are independent, run on
/// up to `jobs` threads and are merged in unit order, so the result list
/// does not depend on depth or jobs.
struct Partition {
  std::size_t depth = 0;
  unsigned jobs = 1;
  // JSON file recording completed units and their results. When it exists
  // and matches the search, completed units are not run again.
  std::string checkpoint;
};

enum class SearchOutcome {
  completed,      // whole space searched
  limit_reached,  // stopped after `limit` results
  proven_empty,   // divisibility rules out every candidate; nothing searched
};

std::string_view outcome_name(SearchOutcome o) noexcept;

struct SearchStats {
  std::size_t units = 0;
  std::size_t units_resumed = 0;
  std::uint64_t nodes = 0;  // partial assignments visited
};

// -- GH backtracking -------------------------------------------------------------------

/// Bound on v * |G| for which search_gh_backtrack accepts a request.
inline constexpr std::size_t kDeskScaleBound = 24;

struct GhSearchSpec {
  std::size_t v = 0;
  GroupPtr group;
  bool normalized = true;  // row 0 and column 0 fixed to the identity
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::size_t bound = kDeskScaleBound;
  Partition partition;
};

struct GhSearchResult {
  SearchOutcome outcome = SearchOutcome::completed;
  std::string reason;  // set for proven_empty
  std::vector<GMatrix> matrices;
  SearchStats stats;
};

/// Row-by-row backtracking for v x v GH(v; G): a partial row is dropped as
/// soon as some pair multiset holds an element more than v/|G| times.
/// Results come in lexicographic order of their row-major entries, and each
/// is re-checked with verify_balance. Throws std::invalid_argument when
/// v * |G| exceeds the bound.
GhSearchResult search_gh_backtrack(const GhSearchSpec& spec);

// -- circulant GW ----------------------------------------------------------------------

struct GwSearchSpec {
  std::size_t v = 0;
  std::size_t k = 0;
  GroupPtr group;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  Partition partition;
};

struct GwSearchResult {
  SearchOutcome outcome = SearchOutcome::completed;
  std::string reason;
  std::size_t lambda = 0;  // inferred overlap k(k-1)/(v-1)
  std::vector<std::vector<Entry>> first_rows;
  SearchStats stats;
};

/// First rows of circulant GW(v, k; G): k group entries and v - k
/// design-zeros. Rows are enumerated lexicographically with the zero below
/// every element; for k = v - 1 the zero is fixed at position 0. Pair
/// balance is tracked per shift d = 1..v/2. Every accepted row is
/// re-checked with verify_balance on the full circulant.
GwSearchResult search_circulant_gw(const GwSearchSpec& spec);

/// Identity first row and column, for abelian groups without zeros or
/// wildcards: each column is multiplied by the inverse of its row-0 entry,
/// then each row by the inverse of its column-0 entry.
GMatrix normalize_matrix(const GMatrix& m);

}  // namespace groupmat
