#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupmat/gmatrix.hpp"
#include "groupmat/verify.hpp"

namespace groupmat {

// -- catalog ------------------------------------------------------------------

enum class CatalogStatus {
  confirmed,   // must pass its claim on every build
  diagnostic,  // report is recorded whatever the verdict
};

std::string_view status_name(CatalogStatus s) noexcept;

struct CatalogEntry {
  std::string name;
  GMatrix matrix;
  Claim claim;
  std::string source;  // where the matrix comes from, in words
  CatalogStatus status = CatalogStatus::confirmed;
  std::string notes;
};

/// Catalog keys in listing order.
std::vector<std::string> catalog_names();

/// Fixture text of a catalog entry. Read from $GROUPMAT_FIXTURE_DIR/<name>.gmat
/// when that variable is set, otherwise from the copy compiled into the
/// library. Throws std::out_of_range for an unknown name, listing the keys.
std::string catalog_fixture_text(std::string_view name);

CatalogEntry catalog_get(std::string_view name);

/// Runs the entry's claimed verifier.
VerificationReport check_entry(const CatalogEntry& entry, const BalanceOptions& options = {});

// -- GH(10; Z6) from four circulant blocks --------------------------------------

/// The four printed first rows over sixth roots, in reading order.
std::array<std::vector<Entry>, 4> gh10_printed_rows();

struct Gh10Candidate {
  // assignment[b] is the printed row placed as block b of X, Y, Z, W.
  std::array<int, 4> assignment{};
  GMatrix matrix;
  VerificationReport report;

  std::string label() const;
};

/// [[X, Y], [W, Z]] of circulants for one assignment of rows to X, Y, Z, W.
GMatrix gh10_matrix(const std::array<std::vector<Entry>, 4>& rows, const std::array<int, 4>& assignment);

/// All 24 assignments, in lexicographic order of the assignment, each with
/// its verify_butson(., 6) report.
std::vector<Gh10Candidate> build_gh10_z6();
std::vector<Gh10Candidate> build_gh10_z6(const std::array<std::vector<Entry>, 4>& rows);

/// A single replaced entry of the printed rows and the number of
/// assignments that pass after the replacement.
struct Gh10Repair {
  int row = 0;
  int column = 0;
  Entry printed;
  Entry replacement;
  int passing = 0;
};

/// Every single-entry change of the printed rows that makes at least one
/// assignment pass, ordered by (row, column, replacement).
std::vector<Gh10Repair> locate_gh10_repairs();

// -- four circulants over the Klein group ---------------------------------------

enum class BlockForm { plain, transpose, back_circulant };

std::string_view block_form_name(BlockForm f) noexcept;

struct Arrangement {
  // letters[r][c] is the first row (0..3 for A..D) placed at block (r, c).
  std::array<std::array<int, 4>, 4> letters{};
  // form[l] applies to every block built from row l.
  std::array<BlockForm, 4> form{};

  std::string label() const;
};

/// The documented catalog: all 576 Latin squares of order 4 in
/// lexicographic order, each crossed with the 81 per-letter form choices
/// (plain, transpose, back-circulant), form index varying fastest.
const std::vector<Arrangement>& arrangement_catalog();

struct ArrangementResult {
  Arrangement arrangement;
  VerificationReport report;
};

/// Block matrix of one arrangement; rows must share a length.
GMatrix four_circulant_matrix(GroupPtr group, const std::array<std::vector<Entry>, 4>& rows, const Arrangement& a);

/// Verifies every arrangement. Reports stop at the first failing pair to
/// keep the sweep cheap; rebuild a matrix with four_circulant_matrix to get
/// the full diagnostic. Work is split over `jobs` threads, results keep the
/// arrangement order.
std::vector<ArrangementResult> build_four_circulant(GroupPtr group, const std::array<std::vector<Entry>, 4>& rows,
                                                    const std::vector<Arrangement>& arrangements,
                                                    unsigned jobs = 1);

/// Printed first rows of length 5 and 7 over the Klein group.
std::array<std::vector<Entry>, 4> klein_rows(int length);

// -- Brock vectors and the cubic residue matrix ---------------------------------

struct BuildResult {
  GMatrix matrix;
  VerificationReport report;
};

/// 3 x 3 grid of circulants from the printed digit vectors over Z3. Length
/// must be 7 or 13.
BuildResult build_brock(int length);

/// 3 x 3 grid of residue_class_matrix blocks over Z3 for p = 13, with the
/// printed coefficients. A class missing from a printed expression gets the
/// design-zero.
BuildResult build_residue_39();
std::array<std::array<ResidueCoefficients, 3>, 3> residue_39_coefficients();

// -- plug-in doubling ---------------------------------------------------------------

enum class PluginAdjoint {
  elementwise,          // C* = entrywise complex conjugate
  conjugate_transpose,  // C* = conjugate transpose; same as above for symmetric C
};

/// [[I + C, I - C], [I - C*, -I - C*]] over sixth roots, for C over cube
/// roots (roots 3 or cyclic 3) with a design-zero diagonal and cube roots
/// elsewhere. Verified with verify_butson(., 6).
BuildResult plugin_double(const GMatrix& c, PluginAdjoint adjoint = PluginAdjoint::elementwise);

// -- GH(n; Z6) existence table ------------------------------------------------------

enum class TableStatus { constructed_verified, construction_failed, listed_ne, listed_unknown, not_attempted };

std::string_view table_status_name(TableStatus s) noexcept;

struct TableRow {
  int n = 0;
  std::string listed;  // comment column of the source table
  TableStatus status = TableStatus::not_attempted;
  std::string recipe;  // how the witness was built, or why not
  std::optional<GMatrix> witness;
  std::optional<VerificationReport> report;
};

/// Listed comment per order 2..52.
std::string_view table_listing(int n);

/// One row per n in [from, to]. Witnesses are Kronecker products of catalog
/// bases over sixth roots, each verified with verify_butson(., 6).
std::vector<TableRow> build_table(int from = 2, int to = 52);

// -- diagnostics --------------------------------------------------------------------

struct KleinPairProduct {
  std::size_t row = 0;
  std::size_t other = 0;
  GroupRingVector product;
};

struct KleinFragment {
  std::array<std::string, 3> qst;  // tokens placed as q, s, t
  GMatrix matrix;                  // circ(e, q, s, t)
  std::vector<KleinPairProduct> products;  // all ordered pairs, rows included
  GroupRingVector off_diagonal_total;
};

struct KleinFragmentReport {
  std::string claim;  // the printed product, not asserted
  std::vector<KleinFragment> fragments;

  std::string to_text() const;
};

/// All 6 bijections {q, s, t} = {a, b, ab}: circ(e, q, s, t) and the
/// group-ring product sum_k x_k y_k^-1 of every ordered row pair.
KleinFragmentReport check_klein_fragment();

struct ConventionRun {
  S3Presentation presentation;
  QuotientConvention convention;
  VerificationReport report;
};

/// The gw13-s3 tokens read under both S3 presentations and checked as a
/// Bhaskar Rao design under both quotient conventions (4 runs).
std::vector<ConventionRun> run_gw13_conventions();

}  // namespace groupmat
