#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#include "groupmat/constructions.hpp"
#include "groupmat/matrix_io.hpp"

namespace groupmat {

namespace detail {
struct EmbeddedFixture {
  const char* name;
  const char* text;
};
extern const EmbeddedFixture kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

namespace {

struct IndexRow {
  const char* name;
  const char* source;
  CatalogStatus status;
  const char* notes;
};

constexpr IndexRow kIndex[] = {
    {"gh20", "explicit 20x20 group-orthogonal example", CatalogStatus::diagnostic,
     "captioned GH(20; Z4) but the entries take five values 0..4, so it is checked over Z5; as printed, 75 row "
     "pairs involving rows 15..19 are unbalanced (see gh20-repaired)"},
    {"gh20-repaired", "explicit 20x20 example with two printing errors corrected", CatalogStatus::confirmed,
     "row 15 has two adjacent entries swapped in block 2 and the bottom-right 4x4 block is shifted by +1; "
     "undoing both makes every pair balanced over Z5"},
    {"gh6-z3", "difference matrix example", CatalogStatus::confirmed, ""},
    {"gh7-z6-a", "first GH(7; Z6) matrix", CatalogStatus::confirmed, "entries +-w^k folded into sixth-root exponents"},
    {"gh7-z6-b", "second GH(7; Z6) matrix", CatalogStatus::confirmed, "entries +-w^k folded into sixth-root exponents"},
    {"gh10-z6-erratum", "GH(10; Z6) from circulant blocks, one entry corrected", CatalogStatus::confirmed,
     "none of the 24 block assignments of the printed rows verifies; this fixture changes a single entry "
     "(see locate_gh10_repairs)"},
    {"butson3", "Butson orthogonality example", CatalogStatus::confirmed, ""},
    {"h4", "classical orthogonality example", CatalogStatus::confirmed, ""},
    {"bh2", "Hadamard matrix of order 2", CatalogStatus::confirmed, "base of the Kronecker recipes"},
    {"complex-a", "complex orthogonality example A", CatalogStatus::confirmed, ""},
    {"complex-b", "complex orthogonality example B", CatalogStatus::confirmed, ""},
    {"quaternion-v", "quaternion orthogonality example", CatalogStatus::confirmed,
     "printed constant is Z; the computed constant is reported"},
    {"klein-g", "group orthogonality example over Z2 x Z2", CatalogStatus::confirmed, ""},
    {"gw13-s3", "circulant GW(13, 9, 6; S3)", CatalogStatus::diagnostic,
     "token ab2 is ambiguous between S3 presentations; see run_gw13_conventions"},
    {"strange13", "circulant with one wildcard per row", CatalogStatus::diagnostic,
     "claimed orthogonal when the wildcard is ignored"},
    {"brock7", "Brock vectors of length 7, GH(21; Z3)", CatalogStatus::confirmed, ""},
    {"brock13", "Brock vectors of length 13, part of GH(39; Z3)", CatalogStatus::diagnostic,
     "the source calls the second example corrupted"},
    {"gw17-z3", "circulant GW(17, 16; Z3), first witness of the circulant search", CatalogStatus::confirmed,
     "input C of the plug-in doubling to order 34"},
    {"fano7", "Fano plane incidence", CatalogStatus::confirmed, "symmetric (7, 3, 1) design"},
};

const IndexRow& index_row(std::string_view name) {
  for (const auto& row : kIndex)
    if (name == row.name) return row;
  std::string keys;
  for (const auto& row : kIndex) keys += (keys.empty() ? "" : ", ") + std::string(row.name);
  throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'; available: " + keys);
}

}  // namespace

std::string_view status_name(CatalogStatus s) noexcept {
  return s == CatalogStatus::confirmed ? "confirmed" : "diagnostic";
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& row : kIndex) out.emplace_back(row.name);
  return out;
}

std::string catalog_fixture_text(std::string_view name) {
  const auto& row = index_row(name);
  if (const char* dir = std::getenv("GROUPMAT_FIXTURE_DIR"); dir && *dir) {
    const auto path = std::filesystem::path(dir) / (std::string(row.name) + ".gmat");
    return read_text_file(path.string());
  }
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    if (name == detail::kEmbeddedFixtures[i].name) return detail::kEmbeddedFixtures[i].text;
  throw std::logic_error("catalog entry '" + std::string(name) + "' has no compiled fixture");
}

CatalogEntry catalog_get(std::string_view name) {
  const auto& row = index_row(name);
  auto doc = parse_matrix(catalog_fixture_text(name));
  return CatalogEntry{row.name, std::move(doc.matrix), parse_claim(doc.semantics), row.source, row.status, row.notes};
}

VerificationReport check_entry(const CatalogEntry& entry, const BalanceOptions& options) {
  return verify_claim(entry.matrix, entry.claim, options);
}

}  // namespace groupmat
