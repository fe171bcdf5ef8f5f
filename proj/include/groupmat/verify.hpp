#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "groupmat/gmatrix.hpp"
#include "groupmat/group_ring.hpp"
#include "groupmat/matrix_io.hpp"
#include "groupmat/quaternion.hpp"

namespace groupmat {

// Declared in order of report listing.
enum class FailureScope { shape, entry, row, column, pair, column_pair };

struct Failure {
  FailureScope scope = FailureScope::pair;
  std::size_t first = 0;
  std::size_t second = 0;  // unused for entry-less scopes (row, column)
  std::string expected;
  std::string actual;
  std::string detail;

  auto key() const { return std::tuple(scope, first, second); }
};

/// Verdict of one checker. pass holds exactly when failures is empty; the
/// failures are ordered by (scope, first, second).
struct VerificationReport {
  bool pass = true;
  std::string property;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Failure> failures;
  // Set when the checker stopped at max_failures; pass is then false.
  bool truncated = false;

  /// Value of a named parameter, or "" when absent.
  std::string param(std::string_view key) const;
  void set_param(std::string key, std::string value);
  void add_failure(Failure f);
  /// Sorts failures and recomputes pass.
  void finish();

  /// Header line "verdict=pass property=balance key=value ..." followed by
  /// one line per failure.
  std::string to_text() const;
};

// -- group balance ---------------------------------------------------------

enum class QuotientConvention {
  right,  // x * y^-1, x from the earlier row
  left,   // y^-1 * x
};

std::string_view convention_name(QuotientConvention c) noexcept;

struct BalanceOptions {
  QuotientConvention convention = QuotientConvention::right;
  std::size_t max_failures = std::numeric_limits<std::size_t>::max();
};

/// Multiset of quotients of rows i and j over columns where both are
/// nonzero.
GroupRingVector pair_quotients(const GMatrix& m, std::size_t i, std::size_t j,
                               QuotientConvention convention = QuotientConvention::right);

/// Difference-matrix / GH / GW balance: every pair of distinct rows must
/// yield each group element equally often, with the same multiplicity for
/// all pairs. With zeros present, rows must also share one weight. Reports
/// lambda (per-element multiplicity), overlap and weight as inferred.
VerificationReport verify_balance(const GMatrix& m, const BalanceOptions& options = {});

// -- Butson ------------------------------------------------------------------

/// Exact Gram matrix M M^C over Z[zeta_q]: passes iff it equals n I. The
/// group must be cyclic or roots of unity whose order divides q (q defaults
/// to the group order).
VerificationReport verify_butson(const GMatrix& m, std::optional<int> q = std::nullopt);

// -- numeric orthogonality --------------------------------------------------

/// Entries are quaternions with integer parts over a shared denominator;
/// nullopt marks a wildcard. Reals and Gaussian integers sit inside.
struct NumericMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<Quaternion>> entries;
  std::int64_t denominator = 1;

  const std::optional<Quaternion>& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Embeds group entries as numbers: cyclic/roots exponents k of order n map
/// to i^(4k/n) (must be Gaussian), q8 to unit quaternions, zero to 0.
NumericMatrix to_numeric(const GMatrix& m);

/// Reads a "group: rational" document; tokens are integers, p/q, "." (0)
/// and "*".
NumericMatrix parse_numeric_matrix(const RawMatrix& raw);

enum class NumericKind { real, complex, quaternion, cretan };

std::string_view numeric_kind_name(NumericKind k) noexcept;

/// Exact check of M adjoint(M) = c I. Wildcards (real kind only) drop a
/// column from a row pair when either row holds one there. Cretan also
/// requires every |entry| <= 1.
VerificationReport verify_numeric(const NumericMatrix& m, NumericKind kind);
VerificationReport verify_numeric(const GMatrix& m, NumericKind kind);

// -- block designs ------------------------------------------------------------

struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

/// Group elements become 1, design-zeros 0. Wildcards are rejected.
IncidenceMatrix flatten(const GMatrix& m);
/// Entries must be exactly 0 or 1.
IncidenceMatrix flatten(const NumericMatrix& m);

/// Unset parameters are inferred from row 0, column 0 and rows (0, 1).
struct DesignParams {
  std::optional<std::size_t> v, b, r, k, lambda;
  bool symmetric = false;
};

VerificationReport verify_block_design(const IncidenceMatrix& m, const DesignParams& params);

/// Underlying BIBD check plus group balance on the signed entries.
VerificationReport verify_bhaskar_rao(const GMatrix& m, const DesignParams& params,
                                      const BalanceOptions& options = {});

// -- property claims ------------------------------------------------------------

/// A property name with optional key=value parameters, as written in a
/// matrix file's semantics line: "balance", "butson q=6", "sbibd",
/// "brd v=13 k=9 lambda=6".
struct Claim {
  std::string property;
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::size_t> number(std::string_view key) const;
  std::string to_string() const;
};

/// Throws std::invalid_argument on an unknown property or malformed pair.
Claim parse_claim(std::string_view text);
bool is_known_property(std::string_view property) noexcept;
/// balance, butson, real, complex, quaternion, cretan, bibd, sbibd, brd.
const std::vector<std::string>& known_properties();

/// Runs the verifier the claim names.
VerificationReport verify_claim(const GMatrix& m, const Claim& claim, const BalanceOptions& options = {});

}  // namespace groupmat
