// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance            run all criteria
//   acceptance --only N   run criterion N (1..12)

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "groupmat/constructions.hpp"
#include "groupmat/cyclotomic.hpp"
#include "groupmat/group_ring.hpp"
#include "groupmat/matrix_io.hpp"
#include "groupmat/search.hpp"
#include "support.hpp"

using namespace groupmat;
using namespace groupmat::testing;

namespace {

// Pinned limits.
constexpr double kGh20Seconds = 1.0;
constexpr double kGw17Seconds = 600.0;
constexpr double kFloatZero = 1e-9;
constexpr int kCycloSamples = 10000;
constexpr int kBalanceSamples = 1000;
constexpr std::size_t kBruteForceBound = 12;  // v * |G|

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED " << what;
    }
  }
  void note(const std::string& what) { detail << (detail.tellp() > 0 ? "; " : "") << what; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pairs_summary(const VerificationReport& r) {
  std::set<std::size_t> later;
  for (const auto& f : r.failures) later.insert(f.second);
  std::string out = std::to_string(r.failures.size()) + " failing pairs";
  if (!later.empty())
    out += ", later row in " + std::to_string(*later.begin()) + ".." + std::to_string(*later.rbegin());
  return out;
}

Outcome gh20() {
  Outcome o;
  const auto e = catalog_get("gh20");
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify_balance(e.matrix);
  const double secs = seconds_since(t0);
  o.require(e.matrix.group()->descriptor() == "cyclic 5", "group is cyclic 5");
  o.require(e.notes.find("Z4") != std::string::npos, "catalog notes record the Z4 caption");
  o.require(r.param("pairs") == "190", "190 pairs checked");
  o.require(r.param("lambda") == "4", "inferred lambda=4");
  o.require(r.pass, "printed matrix balanced (" + pairs_summary(r) + ")");
  o.require(secs < kGh20Seconds, "runtime under 1 s");
  const auto repaired = verify_balance(catalog_get("gh20-repaired").matrix);
  o.note("gh20-repaired " + std::string(repaired.pass ? "passes" : "fails") + " with lambda=" + repaired.param("lambda"));
  return o;
}

Outcome gh6() {
  Outcome o;
  const auto r = verify_balance(catalog_get("gh6-z3").matrix);
  o.require(r.pass, "balance");
  o.require(r.param("lambda") == "2", "lambda=2");
  return o;
}

Outcome gh7() {
  Outcome o;
  for (const char* name : {"gh7-z6-a", "gh7-z6-b"}) {
    const auto r = verify_butson(catalog_get(name).matrix, 6);
    o.require(r.pass && r.param("gram") == "7I", std::string(name) + " Gram = 7I");
  }
  return o;
}

Outcome gh10() {
  Outcome o;
  auto passing_labels = [] {
    std::vector<std::string> out;
    for (const auto& c : build_gh10_z6())
      if (c.report.pass) out.push_back(c.label());
    return out;
  };
  const auto first = passing_labels();
  o.require(first == passing_labels(), "passing set stable across runs");
  o.require(!first.empty(), "at least one of 24 printed assignments passes BH(10,6) (0 pass)");
  bool frozen = false;
  const auto fixture = catalog_get("gh10-z6-erratum").matrix;
  for (const auto& c : build_gh10_z6())
    frozen = frozen || (c.report.pass && c.matrix == fixture);
  o.require(frozen, "frozen fixture is one of the passing printed assignments");
  for (const auto& fix : locate_gh10_repairs())
    o.note("single-entry repair r" + std::to_string(fix.row) + "[" + std::to_string(fix.column) + "] " +
           entry_token(fix.printed, *Group::roots(6)) + " -> " + entry_token(fix.replacement, *Group::roots(6)) +
           " gives " + std::to_string(fix.passing) + " passing assignments");
  return o;
}

Outcome small_fixtures() {
  Outcome o;
  const auto h4 = verify_numeric(catalog_get("h4").matrix, NumericKind::real);
  o.require(h4.pass && h4.param("constant") == "4", "H(4) -> 4I");
  const auto u = verify_butson(catalog_get("butson3").matrix, 3);
  o.require(u.pass && u.param("gram") == "3I", "U -> 3I");
  for (const char* name : {"complex-a", "complex-b"}) {
    const auto r = verify_numeric(catalog_get(name).matrix, NumericKind::complex);
    o.require(r.pass && r.param("constant") == "2", std::string(name) + " -> 2I");
  }
  const auto v = verify_numeric(catalog_get("quaternion-v").matrix, NumericKind::quaternion);
  o.require(v.pass, "quaternion V orthogonal");
  o.require(v.param("constant") == "2", "quaternion constant computed as 2");
  o.note("quaternion constant c=" + v.param("constant"));
  return o;
}

Outcome brock() {
  Outcome o;
  const auto b7 = build_brock(7);
  o.require(b7.report.pass, "brock(7) balanced as GH(21;Z3)");
  const auto a = build_brock(13), b = build_brock(13);
  o.require(a.report.to_text() == b.report.to_text(), "brock(13) diagnostic deterministic");
  o.require(!a.report.truncated, "brock(13) diagnostic not truncated");
  o.require(agrees(a.report, balance_oracle(a.matrix)), "brock(13) names exactly the oracle's failing pairs");
  o.note("brock(13): " + pairs_summary(a.report));
  return o;
}

Outcome residues() {
  Outcome o;
  const auto z13 = Group::cyclic(13);
  const auto classes = cubic_residue_classes(13);
  const auto c0 = GroupRingVector::indicator(z13, classes[0]);
  const auto want = GroupRingVector::indicator(z13, classes[1]) + 2 * GroupRingVector::indicator(z13, classes[2]) +
                    4 * GroupRingVector::delta(z13, 0);
  const auto got = ring_convolve(c0, c0);
  GroupRingVector brute(z13);
  std::size_t ordered_pairs = 0;
  for (int x : classes[0])
    for (int y : classes[0]) {
      brute.add((x + y) % 13);
      ++ordered_pairs;
    }
  o.require(ordered_pairs == 16, "16 ordered pairs");
  o.require(got == want, "C0*C0 = C1 + 2 C2 + 4 delta0 (got " + got.to_string() + ")");
  o.require(brute == got, "double loop agrees with ring_convolve");
  return o;
}

Outcome gw17() {
  Outcome o;
  GwSearchSpec spec;
  spec.v = 17;
  spec.k = 16;
  spec.group = Group::cyclic(3);
  spec.partition.jobs = std::max(1u, std::thread::hardware_concurrency());
  spec.partition.depth = 3;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = search_circulant_gw(spec);
  const double secs = seconds_since(t0);
  o.require(r.outcome == SearchOutcome::completed, "enumeration completed");
  o.require(secs < kGw17Seconds, "under 10 minutes");
  o.require(!r.first_rows.empty(), "at least one first row");
  if (r.first_rows.empty()) return o;
  const auto c = circulant(spec.group, r.first_rows.front());
  o.require(verify_balance(c).pass, "witness verifies");
  o.require(c == catalog_get("gw17-z3").matrix, "first witness equals the gw17-z3 fixture");
  const auto d = plugin_double(c);
  o.require(d.report.pass && d.report.param("gram") == "34I", "plugin_double passes BH(34,6)");
  std::ostringstream s;
  s << r.first_rows.size() << " witnesses, " << r.stats.nodes << " nodes, " << secs << " s";
  o.note(s.str());
  return o;
}

Outcome table() {
  Outcome o;
  const std::set<int> required = {2, 3, 4, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20, 21, 24, 27, 28, 30, 32, 36, 40, 42, 48, 49};
  std::size_t built = 0;
  for (const auto& row : build_table()) {
    const std::string n = std::to_string(row.n);
    if (row.status == TableStatus::constructed_verified) {
      ++built;
      o.require(row.witness && row.witness->rows() == static_cast<std::size_t>(row.n) &&
                    verify_butson(*row.witness, 6).pass,
                "witness for n=" + n);
    }
    if (required.count(row.n)) o.require(row.status == TableStatus::constructed_verified, "n=" + n + " constructed");
    if (row.listed == "NE") o.require(row.status == TableStatus::listed_ne && !row.witness, "n=" + n + " labeled NE");
    if (row.listed == "?")
      o.require(row.status == TableStatus::listed_unknown && !row.witness, "n=" + n + " labeled unknown");
  }
  o.note(std::to_string(built) + " orders constructed and verified");
  return o;
}

Outcome oracles() {
  Outcome o;
  Rng rng(20240601);
  // Exact cyclotomic zero test against floating evaluation.
  int disagreements = 0, zeros = 0;
  std::uniform_int_distribution<int> qd(2, 12), cd(-3, 3);
  for (int t = 0; t < kCycloSamples; ++t) {
    const int q = qd(rng);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(q));
    if (t % 3 == 0) {
      const auto phi = cyclotomic_polynomial(q);
      const auto shift = std::uniform_int_distribution<std::size_t>(0, coeffs.size() - phi.size())(rng);
      const int scale = cd(rng);
      for (std::size_t k = 0; k < phi.size(); ++k) coeffs[shift + k] = scale * phi[k];
      coeffs[std::uniform_int_distribution<std::size_t>(0, coeffs.size() - 1)(rng)] += t % 2;
    } else {
      for (auto& c : coeffs) c = cd(rng);
    }
    const bool exact = cyclo_zero_test(CyclotomicInt(q, coeffs));
    zeros += exact;
    disagreements += exact != (std::abs(cyclo_value(q, coeffs)) < kFloatZero);
  }
  o.require(disagreements == 0, "cyclotomic zero test vs float: " + std::to_string(disagreements) + " disagreements");
  o.note(std::to_string(kCycloSamples) + " sums, " + std::to_string(zeros) + " zero");

  // Pruned backtracking against unpruned enumeration.
  std::size_t cases = 0;
  for (const auto& g : small_groups()) {
    for (std::size_t v = 2; v * static_cast<std::size_t>(g->order()) <= kBruteForceBound; ++v) {
      for (bool normalized : {true, false}) {
        const std::size_t cells = normalized ? (v - 1) * (v - 1) : v * v;
        if (std::pow(static_cast<double>(g->order()), static_cast<double>(cells)) > 4e7) continue;
        GhSearchSpec spec;
        spec.v = v;
        spec.group = g;
        spec.normalized = normalized;
        const auto pruned = search_gh_backtrack(spec);
        const auto brute = brute_force_gh(v, g, normalized);
        ++cases;
        o.require(pruned.matrices == brute, "pruned == brute force for v=" + std::to_string(v) + " over " +
                                                g->descriptor() + (normalized ? " normalized" : ""));
      }
    }
  }
  o.note(std::to_string(cases) + " brute-force cases");

  // verify_balance against the dictionary-count oracle.
  int balance_disagreements = 0, balanced = 0;
  for (int t = 0; t < kBalanceSamples; ++t) {
    const auto g = random_group(rng);
    const auto m = t % 2 ? near_balanced_matrix(rng, g, 2 + rng() % 5)
                         : random_matrix(rng, g, 1 + rng() % 5, 1 + rng() % 6, t % 4 == 0 ? 0.3 : 0.0);
    const auto r = verify_balance(m);
    balanced += r.pass;
    balance_disagreements += !agrees(r, balance_oracle(m));
  }
  o.require(balance_disagreements == 0,
            "verify_balance vs oracle: " + std::to_string(balance_disagreements) + " disagreements");
  o.note(std::to_string(kBalanceSamples) + " random matrices, " + std::to_string(balanced) + " balanced");
  return o;
}

Outcome invariance() {
  Outcome o;
  Rng rng(77);
  for (const auto& name : catalog_names()) {
    const auto e = catalog_get(name);
    const bool base = check_entry(e).pass;
    for (int t = 0; t < 4; ++t) {
      CatalogEntry moved = e;
      moved.matrix = permute_cols(permute_rows(e.matrix, random_permutation(rng, e.matrix.rows())),
                                  random_permutation(rng, e.matrix.cols()));
      o.require(check_entry(moved).pass == base, name + " verdict under row/column permutation");
      if (e.matrix.group()->is_abelian()) {
        std::vector<int> s(moved.matrix.rows());
        for (auto& x : s) x = std::uniform_int_distribution<int>(0, e.matrix.group()->order() - 1)(rng);
        moved.matrix = scale_rows(moved.matrix, s);
        o.require(check_entry(moved).pass == base, name + " verdict under row scaling");
      }
    }
    const auto doc = parse_matrix(catalog_fixture_text(name));
    o.require(parse_matrix(serialize(doc.matrix, doc.semantics)).matrix == doc.matrix, name + " parse(serialize)");
  }

  GhSearchSpec gh;
  gh.v = 6;
  gh.group = Group::cyclic(3);
  const auto serial = search_gh_backtrack(gh);
  gh.partition = {3, 4, ""};
  o.require(search_gh_backtrack(gh).matrices == serial.matrices, "GH(6;Z3) serial == partitioned");
  GwSearchSpec gw;
  gw.v = 17;
  gw.k = 16;
  gw.group = Group::cyclic(3);
  const auto gw_serial = search_circulant_gw(gw);
  gw.partition = {4, 4, ""};
  o.require(search_circulant_gw(gw).first_rows == gw_serial.first_rows, "GW(17,16;Z3) serial == partitioned");
  return o;
}

Outcome diagnostics() {
  Outcome o;
  auto gw13_text = [] {
    std::string out;
    for (const auto& run : run_gw13_conventions())
      out += std::string(run.presentation == S3Presentation::a2b3 ? "a2b3 " : "a3b2 ") + run.report.to_text();
    return out;
  };
  const auto runs = run_gw13_conventions();
  o.require(runs.size() == 4, "gw13-s3 under 4 conventions");
  o.require(gw13_text() == gw13_text(), "gw13-s3 reports deterministic");
  std::string verdicts;
  for (const auto& r : runs)
    verdicts += std::string(verdicts.empty() ? "" : ",") + (r.presentation == S3Presentation::a2b3 ? "a2b3/" : "a3b2/") +
                std::string(convention_name(r.convention)) + "=" + (r.report.pass ? "pass" : "fail");
  o.note("gw13 " + verdicts);

  const auto strange = catalog_get("strange13").matrix;
  const auto s1 = verify_numeric(strange, NumericKind::real), s2 = verify_numeric(strange, NumericKind::real);
  o.require(s1.to_text() == s2.to_text(), "strange13 report deterministic");
  o.require(s1.pass, "strange13 wildcard-masked real orthogonality");
  o.note("strange13 constant=" + s1.param("constant"));

  const auto r1 = build_residue_39(), r2 = build_residue_39();
  o.require(r1.report.to_text() == r2.report.to_text(), "residue 39 report deterministic");
  o.note("residue39: " + pairs_summary(r1.report));

  o.require(check_klein_fragment().to_text() == check_klein_fragment().to_text(), "klein fragment deterministic");
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"printed 20x20 matrix balanced over Z5 with lambda=4", gh20},
      {"GH(6;Z3) difference matrix balanced with lambda=2", gh6},
      {"both 7x7 matrices are BH(7,6) with Gram 7I", gh7},
      {"GH(10;Z6) from the printed circulant rows", gh10},
      {"classical, Butson, complex and quaternion fixtures", small_fixtures},
      {"Brock vectors: length 7 passes, length 13 diagnostic", brock},
      {"cubic residue identity over Z13", residues},
      {"circulant GW(17,16;Z3) search and BH(34,6) doubling", gw17},
      {"existence table witnesses", table},
      {"oracle equivalences", oracles},
      {"invariance suite", invariance},
      {"diagnostic entries", diagnostics},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].title << " | "
              << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
