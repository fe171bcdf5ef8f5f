// groupmat: verify, construct, search and tabulate matrices orthogonal over
// finite groups.
//
// Exit codes: 0 pass/success, 1 verified failure, 2 usage or parse error,
// 3 internal error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupmat/constructions.hpp"
#include "groupmat/matrix_io.hpp"
#include "groupmat/search.hpp"
#include "groupmat/verify.hpp"

namespace fs = std::filesystem;
using namespace groupmat;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_report(const VerificationReport& r) { std::cout << r.to_text(); }

void write_matrix(const fs::path& path, const GMatrix& m, std::string_view semantics) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text_file(path.string(), serialize(m, semantics));
  std::cout << "wrote " << path.string() << " (" << m.rows() << "x" << m.cols() << ")\n";
}

QuotientConvention parse_convention(const std::string& s) {
  if (s == "right") return QuotientConvention::right;
  if (s == "left") return QuotientConvention::left;
  throw UsageError("convention must be right or left, got '" + s + "'");
}

// -- verify --------------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string property = "auto";
  std::string convention = "right";
  std::size_t max_failures = 0;
};

std::vector<Claim> infer_claims(const GMatrix& m, const std::string& semantics) {
  if (!semantics.empty() && semantics != "none") {
    std::istringstream in(semantics);
    std::string word;
    in >> word;
    if (is_known_property(word)) return {parse_claim(semantics)};
  }
  const Group& g = *m.group();
  if (m.has_wildcards()) return {parse_claim("real")};
  if (m.has_zeros()) return {parse_claim("balance")};
  std::vector<Claim> out;
  switch (g.kind()) {
    case GroupKind::cyclic:
    case GroupKind::roots: {
      out.push_back(parse_claim("butson"));
      out.push_back(parse_claim("balance"));
      if (4 % g.order() == 0) out.push_back(parse_claim(g.order() <= 2 ? "real" : "complex"));
      break;
    }
    case GroupKind::q8:
      out.push_back(parse_claim("quaternion"));
      out.push_back(parse_claim("balance"));
      break;
    default:
      out.push_back(parse_claim("balance"));
  }
  return out;
}

int verify_numeric_file(const RawMatrix& raw, const VerifyArgs& args) {
  const NumericMatrix m = parse_numeric_matrix(raw);
  std::string property = args.property;
  if (property == "auto") {
    std::istringstream in(raw.header.semantics);
    std::string word;
    in >> word;
    if (word == "real" || word == "cretan" || word == "bibd" || word == "sbibd") property = word;
    else property = m.denominator > 1 ? "cretan" : "real";
  }
  VerificationReport report;
  if (property == "real") report = verify_numeric(m, NumericKind::real);
  else if (property == "cretan") report = verify_numeric(m, NumericKind::cretan);
  else if (property == "bibd" || property == "sbibd") {
    Claim c = parse_claim(property);
    try {
      if (Claim header = parse_claim(raw.header.semantics); header.property == property) c = header;
    } catch (const std::invalid_argument&) {
    }
    DesignParams d;
    d.v = c.number("v");
    d.b = c.number("b");
    d.r = c.number("r");
    d.k = c.number("k");
    d.lambda = c.number("lambda");
    d.symmetric = property == "sbibd";
    report = verify_block_design(flatten(m), d);
  } else {
    throw UsageError("property " + property + " does not apply to a rational matrix");
  }
  print_report(report);
  return report.pass ? kPass : kFail;
}

int cmd_verify(const VerifyArgs& args) {
  if (!fs::is_regular_file(args.file)) throw UsageError("no such file '" + args.file + "'");
  const std::string text = read_text_file(args.file);
  const RawMatrix raw = read_raw_matrix(text);
  if (raw.header.group == "rational") return verify_numeric_file(raw, args);
  const MatrixDocument doc = parse_matrix_from(raw);
  BalanceOptions options;
  options.convention = parse_convention(args.convention);
  if (args.max_failures > 0) options.max_failures = args.max_failures;

  std::vector<Claim> claims;
  if (args.property == "auto") {
    claims = infer_claims(doc.matrix, doc.semantics);
  } else {
    if (!is_known_property(args.property)) throw UsageError("unknown property '" + args.property + "'");
    Claim header;
    try {
      header = parse_claim(doc.semantics);
    } catch (const std::invalid_argument&) {
    }
    // Keep parameters from the header when it names the same property.
    claims.push_back(header.property == args.property ? header : parse_claim(args.property));
  }
  bool any_pass = false;
  for (const auto& c : claims) {
    const auto report = verify_claim(doc.matrix, c, options);
    print_report(report);
    any_pass = any_pass || report.pass;
  }
  return any_pass ? kPass : kFail;
}

// -- construct -----------------------------------------------------------------------

struct ConstructArgs {
  std::vector<std::string> names;
  std::string out;
  int length = 0;
  std::string input;
  bool transpose = false;
  bool repairs = false;
  unsigned jobs = 1;
};

fs::path out_path(const ConstructArgs& a, const std::string& default_name) {
  if (a.out.empty()) return fs::path(default_name + ".gmat");
  fs::path p(a.out);
  if (fs::is_directory(p) || a.out.back() == '/') return p / (default_name + ".gmat");
  return p;
}

GMatrix load_matrix(const std::string& name_or_path) {
  if (fs::exists(name_or_path)) return parse_matrix(read_text_file(name_or_path)).matrix;
  return catalog_get(name_or_path).matrix;
}

int construct_catalog(const ConstructArgs& a, const std::string& name) {
  const auto entry = catalog_get(name);
  write_matrix(out_path(a, name), entry.matrix, entry.claim.to_string());
  const auto report = check_entry(entry);
  print_report(report);
  if (entry.status == CatalogStatus::diagnostic) return kPass;
  return report.pass ? kPass : kFail;
}

int construct_gh10(const ConstructArgs& a) {
  const auto candidates = build_gh10_z6();
  const auto g = Group::roots(6);
  int passing = 0;
  for (const auto& c : candidates) {
    std::cout << "assignment " << c.label() << " verdict=" << (c.report.pass ? "pass" : "fail")
              << " failures=" << c.report.failures.size() << "\n";
    if (c.report.pass) {
      ++passing;
      std::string label = c.label();
      std::replace(label.begin(), label.end(), ' ', '-');
      std::replace(label.begin(), label.end(), '=', '-');
      write_matrix(out_path(a, "gh10-z6-" + label), c.matrix, "butson q=6");
    }
  }
  std::cout << "passing=" << passing << " of " << candidates.size() << "\n";
  if (a.repairs) {
    for (const auto& r : locate_gh10_repairs())
      std::cout << "repair row=r" << r.row << " column=" << r.column << " printed=" << entry_token(r.printed, *g)
                << " replacement=" << entry_token(r.replacement, *g) << " passing=" << r.passing << "\n";
  }
  return passing > 0 ? kPass : kFail;
}

int construct_four_circulant(const ConstructArgs& a) {
  if (a.length != 5 && a.length != 7) throw UsageError("four-circulant needs --length 5 or 7");
  const auto group = Group::product({2, 2});
  const auto rows = klein_rows(a.length);
  const auto& arrangements = arrangement_catalog();
  const auto results = build_four_circulant(group, rows, arrangements, a.jobs);
  std::size_t passing = 0;
  for (const auto& r : results) {
    if (!r.report.pass) continue;
    ++passing;
    std::cout << "pass " << r.arrangement.label() << "\n";
  }
  std::cout << "arrangements=" << results.size() << " passing=" << passing << "\n";
  // Full diagnostic for the first arrangement, as a reference point.
  const auto first = verify_balance(four_circulant_matrix(group, rows, arrangements.front()));
  std::cout << "reference " << arrangements.front().label() << "\n";
  print_report(first);
  return kPass;
}

int construct_brock(const ConstructArgs& a) {
  if (a.length != 7 && a.length != 13) throw UsageError("brock needs --length 7 or 13");
  const auto built = build_brock(a.length);
  write_matrix(out_path(a, "brock" + std::to_string(a.length)), built.matrix, "balance");
  print_report(built.report);
  if (a.length == 13) return kPass;
  return built.report.pass ? kPass : kFail;
}

int construct_plugin(const ConstructArgs& a) {
  const GMatrix c = load_matrix(a.input.empty() ? "gw17-z3" : a.input);
  const auto built = plugin_double(c, a.transpose ? PluginAdjoint::conjugate_transpose : PluginAdjoint::elementwise);
  write_matrix(out_path(a, "plugin-double"), built.matrix, "butson q=6");
  print_report(built.report);
  return built.report.pass ? kPass : kFail;
}

int construct_kronecker(const ConstructArgs& a) {
  if (a.names.size() < 3) throw UsageError("kronecker needs two or more operands");
  GMatrix acc = load_matrix(a.names[1]);
  for (std::size_t i = 2; i < a.names.size(); ++i) acc = kronecker_compose(acc, load_matrix(a.names[i]));
  const Group& g = *acc.group();
  const bool roots = g.kind() == GroupKind::cyclic || g.kind() == GroupKind::roots;
  const std::string semantics = roots ? "butson q=" + std::to_string(g.order()) : "balance";
  write_matrix(out_path(a, "kronecker"), acc, semantics);
  const auto report = verify_claim(acc, parse_claim(semantics));
  print_report(report);
  return report.pass ? kPass : kFail;
}

int cmd_construct(const ConstructArgs& a) {
  if (a.names.empty()) throw UsageError("construct needs a catalog name or builder");
  const std::string& what = a.names[0];
  if (what == "gh10-z6") return construct_gh10(a);
  if (what == "four-circulant") return construct_four_circulant(a);
  if (what == "brock") return construct_brock(a);
  if (what == "residue39") {
    const auto built = build_residue_39();
    write_matrix(out_path(a, "residue39"), built.matrix, "balance");
    print_report(built.report);
    return kPass;
  }
  if (what == "plugin-double") return construct_plugin(a);
  if (what == "kronecker") return construct_kronecker(a);
  if (what == "klein-fragment") {
    std::cout << check_klein_fragment().to_text();
    return kPass;
  }
  if (what == "gw13-conventions") {
    for (const auto& run : run_gw13_conventions()) {
      std::cout << "run presentation=" << (run.presentation == S3Presentation::a2b3 ? "a2b3" : "a3b2")
                << " convention=" << convention_name(run.convention) << "\n";
      print_report(run.report);
    }
    return kPass;
  }
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), what) != names.end()) return construct_catalog(a, what);
  throw UsageError("unknown builder or catalog entry '" + what +
                   "'; builders: gh10-z6, four-circulant, brock, residue39, plugin-double, kronecker, "
                   "klein-fragment, gw13-conventions");
}

// -- search --------------------------------------------------------------------------

struct SearchArgs {
  std::string target;
  std::size_t v = 0;
  std::size_t k = 0;
  std::string group;
  std::size_t limit = 0;
  bool no_normalize = false;
  std::size_t depth = 0;
  unsigned jobs = 1;
  std::string out;
  std::string checkpoint;
};

int cmd_search(const SearchArgs& a) {
  GroupPtr group;
  try {
    group = make_group(a.group);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Partition partition{a.depth, std::max(1u, a.jobs), a.checkpoint};
  const std::size_t limit = a.limit == 0 ? std::numeric_limits<std::size_t>::max() : a.limit;
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json manifest;
  manifest["spec"] = {{"target", a.target}, {"v", a.v}, {"group", group->descriptor()}, {"limit", a.limit}};
  manifest["partition"] = {{"depth", a.depth}, {"jobs", partition.jobs}};
  std::vector<GMatrix> matrices;
  SearchOutcome outcome;
  std::string reason;
  SearchStats stats;
  try {
    if (a.target == "gh") {
      GhSearchSpec spec{a.v, group, !a.no_normalize, limit, kDeskScaleBound, partition};
      auto res = search_gh_backtrack(spec);
      outcome = res.outcome;
      reason = res.reason;
      stats = res.stats;
      manifest["spec"]["normalized"] = !a.no_normalize;
      for (auto& m : res.matrices) {
        std::cout << "result " << matrices.size() << "\n" << serialize(m, "balance");
        matrices.push_back(std::move(m));
      }
    } else if (a.target == "circulant-gw") {
      GwSearchSpec spec{a.v, a.k == 0 ? a.v : a.k, group, limit, partition};
      auto res = search_circulant_gw(spec);
      outcome = res.outcome;
      reason = res.reason;
      stats = res.stats;
      manifest["spec"]["k"] = spec.k;
      manifest["lambda"] = res.lambda;
      for (const auto& row : res.first_rows) {
        std::cout << "first-row";
        for (Entry e : row) std::cout << ' ' << entry_token(e, *group);
        std::cout << "\n";
        matrices.push_back(circulant(group, row));
      }
    } else {
      throw UsageError("search target must be gh or circulant-gw, got '" + a.target + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "outcome=" << outcome_name(outcome) << " results=" << matrices.size() << " units=" << stats.units
            << " nodes=" << stats.nodes;
  if (!reason.empty()) std::cout << " reason=\"" << reason << "\"";
  std::cout << "\n";
  if (!a.out.empty()) {
    fs::create_directories(a.out);
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "result-%06zu.gmat", i);
      write_text_file((fs::path(a.out) / name).string(), serialize(matrices[i], "balance"));
    }
    manifest["outcome"] = std::string(outcome_name(outcome));
    manifest["reason"] = reason;
    manifest["counts"] = {{"results", matrices.size()},
                          {"units", stats.units},
                          {"units_resumed", stats.units_resumed},
                          {"nodes", stats.nodes}};
    manifest["wall_seconds"] = seconds;
    std::ofstream((fs::path(a.out) / "manifest.json").string()) << manifest.dump(2) << "\n";
  }
  return kPass;
}

// -- table ---------------------------------------------------------------------------

int cmd_table(int from, int to, const std::string& out) {
  if (from < 2 || to > 52 || from > to) throw UsageError("table range must lie within 2..52");
  bool all_ok = true;
  for (const auto& row : build_table(from, to)) {
    std::cout << "n=" << row.n << " status=" << table_status_name(row.status) << " listed=\"" << row.listed << "\"";
    if (!row.recipe.empty()) std::cout << " recipe=\"" << row.recipe << "\"";
    if (row.report) std::cout << " gram=" << row.report->param("gram");
    std::cout << "\n";
    if (row.status == TableStatus::construction_failed) all_ok = false;
    if (row.witness && !out.empty()) {
      fs::create_directories(out);
      write_text_file((fs::path(out) / ("bh" + std::to_string(row.n) + ".gmat")).string(),
                      serialize(*row.witness, "butson q=6"));
    }
  }
  return all_ok ? kPass : kFail;
}

// -- catalog -------------------------------------------------------------------------

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out) {
  if (action == "list" || action == "index") {
    for (const auto& n : catalog_names()) {
      const auto e = catalog_get(n);
      std::cout << e.name << "\t" << e.source << "\t" << e.claim.to_string() << "\t" << status_name(e.status) << "\n";
    }
    return kPass;
  }
  if (action == "show") {
    if (name.empty()) throw UsageError("catalog show needs a name");
    const auto e = catalog_get(name);
    std::cout << "name: " << e.name << "\nstatus: " << status_name(e.status) << "\nclaim: " << e.claim.to_string()
              << "\nsource: " << e.source << "\n";
    if (!e.notes.empty()) std::cout << "notes: " << e.notes << "\n";
    std::cout << catalog_fixture_text(name);
    return kPass;
  }
  if (action == "export") {
    const auto names = name.empty() ? catalog_names() : std::vector<std::string>{name};
    const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(dir);
    for (const auto& n : names) {
      write_text_file((dir / (n + ".gmat")).string(), catalog_fixture_text(n));
      std::cout << "wrote " << (dir / (n + ".gmat")).string() << "\n";
    }
    return kPass;
  }
  if (action == "check") {
    bool ok = true;
    for (const auto& n : catalog_names()) {
      const auto e = catalog_get(n);
      const auto r = check_entry(e);
      std::cout << n << " " << status_name(e.status) << " verdict=" << (r.pass ? "pass" : "fail")
                << " failures=" << r.failures.size() << "\n";
      if (e.status == CatalogStatus::confirmed && !r.pass) ok = false;
    }
    return ok ? kPass : kFail;
  }
  throw UsageError("catalog action must be list, index, show, export or check");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, construct and search matrices orthogonal over finite groups"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a matrix file against a property");
  verify->add_option("file", verify_args.file, "Matrix file")->required();
  verify->add_option("-p,--property", verify_args.property,
                     "auto|balance|butson|real|complex|quaternion|cretan|bibd|sbibd|brd");
  verify->add_option("--convention", verify_args.convention, "Quotient convention for balance: right or left");
  verify->add_option("--max-failures", verify_args.max_failures, "Stop after this many failures (0 = all)");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a catalog matrix or run a builder");
  construct->add_option("what", construct_args.names, "Catalog name or builder, then builder operands")->required();
  construct->add_option("-o,--out", construct_args.out, "Output file or directory");
  construct->add_option("--length", construct_args.length, "Row length for brock and four-circulant");
  construct->add_option("--input", construct_args.input, "C for plugin-double (file or catalog name)");
  construct->add_flag("--transpose", construct_args.transpose, "plugin-double: use the conjugate transpose for C*");
  construct->add_flag("--repairs", construct_args.repairs, "gh10-z6: list single-entry repairs");
  construct->add_option("-j,--jobs", construct_args.jobs, "Worker threads");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exhaustive or circulant search");
  search->add_option("target", search_args.target, "gh or circulant-gw")->required();
  search->add_option("--v", search_args.v, "Order")->required();
  search->add_option("--k", search_args.k, "Weight (circulant-gw; default v)");
  search->add_option("--group", search_args.group, "Group descriptor, e.g. z3, klein, s3")->required();
  search->add_option("--limit", search_args.limit, "Stop after this many results (0 = all)");
  search->add_flag("--no-normalize", search_args.no_normalize, "gh: do not fix row 0 and column 0");
  search->add_option("--depth", search_args.depth, "Prefix length defining work units");
  search->add_option("-j,--jobs", search_args.jobs, "Concurrent work units");
  search->add_option("-o,--out", search_args.out, "Directory for result files and manifest.json");
  search->add_option("--checkpoint", search_args.checkpoint, "Checkpoint file for resumable runs");

  int table_from = 2, table_to = 52;
  std::string table_out;
  auto* table = app.add_subcommand("table", "Reconstruct the GH(n; Z6) existence table");
  table->add_option("--from", table_from, "First order");
  table->add_option("--to", table_to, "Last order");
  table->add_option("-o,--out", table_out, "Directory for witness matrices");

  std::string catalog_action, catalog_name, catalog_out;
  auto* catalog = app.add_subcommand("catalog", "List, show, export or check catalog fixtures");
  catalog->add_option("action", catalog_action, "list|index|show|export|check")->required();
  catalog->add_option("name", catalog_name, "Catalog entry");
  catalog->add_option("-o,--out", catalog_out, "Export directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_args);
    if (*construct) return cmd_construct(construct_args);
    if (*search) return cmd_search(search_args);
    if (*table) return cmd_table(table_from, table_to, table_out);
    if (*catalog) return cmd_catalog(catalog_action, catalog_name, catalog_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
