// posetsat: analyze posets, build and verify saturated families in the
// hypercube, and scan for cube-width conjecture violations.
//
// Exit codes: 0 ok, 2 input error, 3 size cap exceeded, 4 internal
// invariant violation. Machine output goes to stdout (or --out), human
// diagnostics to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetsat/embedding.hpp"
#include "posetsat/io.hpp"
#include "posetsat/saturation.hpp"
#include "posetsat/vc.hpp"

namespace {

using nlohmann::json;
using namespace posetsat;

struct PosetSource {
  std::string file;
  std::string catalog_name;
};

Poset resolve_poset(const PosetSource& src) {
  if (src.file.empty() == src.catalog_name.empty()) {
    throw ParseError("exactly one of --poset and --catalog is required");
  }
  if (!src.file.empty()) return load_poset_file(src.file);
  auto colon = src.catalog_name.find(':');
  if (colon == std::string::npos) return catalog(src.catalog_name);
  int param;
  try {
    param = std::stoi(src.catalog_name.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("bad catalog parameter in '" + src.catalog_name + "'");
  }
  return catalog(src.catalog_name.substr(0, colon), param);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << content;
}

std::string ledger_csv(const BoundsReport& report) {
  std::ostringstream csv;
  csv << "name,lhs,rhs,holds\n";
  auto row = [&](const LedgerEntry& e) {
    csv << e.name << "," << e.lhs << "," << e.rhs << "," << (e.holds ? 1 : 0) << "\n";
  };
  for (const auto& e : report.entries) row(e);
  row(report.conjecture_41);
  return csv.str();
}

int cmd_analyze(const PosetSource& src, const std::string& out, const std::string& format) {
  Poset p = resolve_poset(src);
  BoundsReport report = width_bound_ledger(p);
  if (format == "csv") {
    write_output(out, ledger_csv(report));
    return 0;
  }
  json j = ledger_to_json(report);
  j["maximal_elements"] = maximal_elements(p);
  SeparationCheck sep = check_separation(report.witness);
  j["witness_separates"] = sep.separates;
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_saturate(const PosetSource& src, int n, const std::string& mode_name,
                 std::uint64_t samples, std::uint64_t seed, bool trace,
                 const std::string& out) {
  Poset p = resolve_poset(src);
  std::string mode = mode_name;
  if (mode.empty()) mode = n <= 20 ? "full" : "sample";
  if (mode != "full" && mode != "sample") throw ParseError("--mode must be full or sample");

  auto start = std::chrono::steady_clock::now();
  GreedyResult greedy = greedy_saturated_family(p, n, trace);
  VerifyMode verify_mode{mode == "full", samples, seed};
  SaturationReport verified = verify_saturated(p, greedy.family, verify_mode);
  VcReport vc = vc_dimension(greedy.family);
  Claim31Report claim = claim31_check(p, greedy.family);
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  json j{{"schema_version", kSchemaVersion},
         {"construction", saturation_report_to_json(greedy.report)},
         {"family", family_to_json(greedy.family)},
         {"family_size", greedy.family.size()},
         {"verification", saturation_report_to_json(verified)},
         {"vc", vc_report_to_json(vc)},
         {"claim31", claim31_to_json(claim)},
         {"wall_time_ms", elapsed}};
  write_output(out, j.dump(2) + "\n");
  if (trace) {
    std::ostringstream csv;
    csv << "layer,accepted,rejected\n";
    for (const auto& t : greedy.report.trace) {
      csv << t.layer << "," << t.accepted << "," << t.rejected << "\n";
    }
    std::cerr << csv.str();
  }
  return 0;
}

int cmd_conjecture_scan(int max_size, bool random_mode, int random_size, int count,
                        std::uint64_t seed, const std::string& out) {
  std::ostringstream csv;
  csv << "poset,size,h_star,w_star,conjecture_41\n";
  int violations = 0;
  auto scan_one = [&](const Poset& p) {
    HeightWidthResult hw = cube_width(p);
    bool holds = hw.cube_width <= p.size();
    if (!holds) {
      ++violations;
      std::cerr << "CONJECTURE VIOLATION: w*(" << poset_to_dsl(p) << ") = " << hw.cube_width
                << " > |P| = " << p.size() << "\n";
    }
    csv << "\"" << poset_to_dsl(p) << "\"," << p.size() << "," << hw.cube_height << ","
        << hw.cube_width << "," << (holds ? 1 : 0) << "\n";
  };
  if (random_mode) {
    if (random_size < 1 || random_size > 8) throw SizeError("--size must be in [1,8] for random scans");
    for (int i = 0; i < count; ++i) {
      double density = 0.1 + 0.8 * (i % 9) / 8.0;
      scan_one(random_poset(random_size, density, seed + static_cast<std::uint64_t>(i)));
    }
  } else {
    for (int k = 1; k <= max_size; ++k) {
      for (const Poset& p : enumerate_posets(k)) scan_one(p);
    }
  }
  write_output(out, csv.str());
  if (violations > 0) {
    std::cerr << violations << " violation(s) of the cube-width conjecture found; "
              << "see the serialized posets above.\n";
  }
  return 0;
}

int cmd_oracle(const PosetSource& src, int n, const std::string& out) {
  Poset p = resolve_poset(src);
  if (p.size() > 4) throw SizeError("oracle poset size capped at 4");
  OracleResult oracle = exact_sat_oracle(p, n);
  GreedyResult greedy = greedy_saturated_family(p, n);
  json j{{"schema_version", kSchemaVersion},
         {"poset", poset_to_dsl(p)},
         {"ground", n},
         {"exact_sat", oracle.min_size},
         {"exact_witness", family_to_json(oracle.witness)},
         {"greedy_size", greedy.family.size()},
         {"greedy_family", family_to_json(greedy.family)}};
  write_output(out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset saturation toolkit"};
  app.require_subcommand(1);

  PosetSource src;
  std::string out, format = "json", mode;
  int n = 0;
  std::uint64_t samples = 10000, seed = 0;
  bool trace = false;

  auto add_poset_opts = [&](CLI::App* cmd) {
    cmd->add_option("--poset", src.file, "poset file (JSON or 'k; i<j ...' DSL)");
    cmd->add_option("--catalog", src.catalog_name, "catalog poset, e.g. butterfly or chain:5");
    cmd->add_option("--out", out, "output path (default stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "poset invariants, cube-height/width, bound ledger");
  add_poset_opts(analyze);
  analyze->add_option("--format", format, "json or csv");

  auto* saturate = app.add_subcommand("saturate", "greedy saturated family + verification + VC report");
  add_poset_opts(saturate);
  saturate->add_option("--n", n, "ground set size")->required();
  saturate->add_option("--mode", mode, "full or sample (default: full up to n=20)");
  saturate->add_option("--samples", samples, "sample count in sample mode");
  saturate->add_option("--seed", seed, "sample seed");
  saturate->add_flag("--trace", trace, "emit per-layer accept/reject CSV on stderr");

  auto* scan = app.add_subcommand("conjecture-scan", "scan posets for cube-width conjecture violations");
  int max_size = 5, random_size = 7, count = 100;
  bool random_mode = false;
  scan->add_option("--max-size", max_size, "exhaustive scan over all posets up to this size (<= 6)");
  scan->add_flag("--random", random_mode, "scan seeded random posets instead");
  scan->add_option("--size", random_size, "random poset size (<= 8)");
  scan->add_option("--count", count, "number of random posets");
  scan->add_option("--seed", seed, "random scan seed");
  scan->add_option("--out", out, "output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "exact minimum saturated family size (n <= 4)");
  add_poset_opts(oracle);
  oracle->add_option("--n", n, "ground set size (<= 4)")->required();

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return cmd_analyze(src, out, format);
    if (saturate->parsed()) return cmd_saturate(src, n, mode, samples, seed, trace, out);
    if (scan->parsed()) return cmd_conjecture_scan(max_size, random_mode, random_size, count, seed, out);
    if (oracle->parsed()) return cmd_oracle(src, n, out);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SizeError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
