#include <cstdio>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylgenus/octonion.hpp"
#include "weylgenus/report.hpp"
#include "weylgenus/selftest.hpp"

namespace {

using namespace genus;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitStrictDiscrepancy = 3;
constexpr int kExitResource = 4;

struct CommonFlags {
  std::string type = "A";
  int rank = 0;
  std::string mode = "group";
  std::string method = "both";
  std::vector<int> denominators = {4, 8, 12, 24};
  bool json = false;
  bool md = false;
  bool strict = false;
  std::uint64_t seed = 12345;
};

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "emit JSON");
  cmd->add_flag("--md", f.md, "emit Markdown (default)");
}

GroupType parse_type(const CommonFlags& f) {
  Family fam = family_from_string(f.type);
  int rank = f.rank;
  if (fam == Family::G2) rank = 2;
  if (fam == Family::F4) rank = 4;
  if (rank == 0)
    throw std::invalid_argument("--rank is required for classical types");
  GroupType t{fam, rank};
  if (!rank_supported(t))
    throw std::invalid_argument("unsupported rank " + std::to_string(rank) +
                                " for type " + f.type);
  return t;
}

ClassifyOptions classify_options(const CommonFlags& f) {
  ClassifyOptions opts;
  opts.denominators = f.denominators;
  return opts;
}

int emit_genus(const CommonFlags& f, bool classes_only) {
  GroupType t = parse_type(f);
  ActionMode mode = mode_from_string(f.mode);
  bool run_formula = !classes_only && f.method != "brute";
  bool run_brute = classes_only || f.method != "formula";
  if (f.method != "formula" && f.method != "brute" && f.method != "both")
    throw std::invalid_argument("--method must be formula|brute|both");
  GenusReport rep =
      make_genus_report(t, mode, run_formula, run_brute, classify_options(f));
  std::cout << (f.json ? rep.to_json() : rep.to_markdown()) << "\n";
  if (f.strict && rep.discrepancy) return kExitStrictDiscrepancy;
  return kExitOk;
}

int emit_table(const CommonFlags& f, int max_rank) {
  ActionMode mode = mode_from_string(f.mode);
  TableReport table = make_table_report(mode, max_rank, classify_options(f));
  std::cout << (f.json ? table.to_json() : table.to_markdown()) << "\n";
  if (f.strict)
    for (const TableRow& row : table.rows)
      if (!row.agree) return kExitStrictDiscrepancy;
  return kExitOk;
}

int emit_compare(const CommonFlags& f, int coarse_index) {
  GroupType t = parse_type(f);
  CompareReport rep =
      make_compare_report(t, coarse_index, classify_options(f));
  std::cout << (f.json ? rep.to_json() : rep.to_markdown()) << "\n";
  return kExitOk;
}

int emit_octonion_check(const CommonFlags& f, int samples) {
  std::mt19937_64 engine(f.seed);
  auto draw = [&engine](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine() % (hi - lo + 1));
  };
  int passed = 0;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (int i = 0; i < samples; ++i) {
    std::array<Frac, 4> params;
    for (auto& p : params) p = Frac(draw(-20, 20), draw(1, 12));
    auto chk = check_derivation(params);
    if (chk.ok) {
      ++passed;
    } else {
      nlohmann::ordered_json row;
      std::vector<std::string> ps;
      for (auto& p : params) ps.push_back(p.str());
      row["params"] = ps;
      row["failing_pair"] = {chk.i, chk.j};
      failures.push_back(row);
    }
  }
  if (f.json) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["samples"] = samples;
    j["passed"] = passed;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << passed << "/" << samples
              << " pass (derivation identity on all 64 basis pairs)\n";
    if (!failures.empty()) std::cout << failures.dump(2) << "\n";
  }
  return passed == samples ? kExitOk : 1;
}

int emit_selftest(const CommonFlags& f) {
  SelftestOptions opts;
  opts.seed = f.seed;
  std::vector<CriterionResult> results = run_acceptance(opts);
  bool all = true;
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    char line[64];
    std::snprintf(line, sizeof(line), " (%.2fs)", r.seconds);
    std::ostream& human = f.json ? std::cerr : std::cout;
    human << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
          << r.name << " — " << r.detail << line << "\n";
  }
  if (f.json) std::cout << selftest_json(results, f.seed) << "\n";
  return all ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "genus — orbit-type counts for the compact simply connected simple "
      "groups (A, B, C, D, G2, F4): closed-form formulas cross-checked by "
      "exhaustive Weyl-stabilizer enumeration over rational grids"};
  app.require_subcommand(1);
  CommonFlags f;

  auto add_type_flags = [&f](CLI::App* cmd, bool need_mode = true) {
    cmd->add_option("--type", f.type, "group type: A, B, C, D, G2, F4");
    cmd->add_option("--rank", f.rank, "rank (ignored for G2/F4)");
    if (need_mode)
      cmd->add_option("--mode", f.mode,
                      "group (conjugation on T) or algebra (adjoint on t)");
  };
  auto add_run_flags = [&f](CLI::App* cmd) {
    cmd->add_option("--denominators", f.denominators,
                    "grid denominator schedule")
        ->delimiter(',');
    cmd->add_flag("--strict", f.strict,
                  "exit 3 when formula and brute force disagree");
    cmd->add_option("--seed", f.seed, "seed for randomized checks");
  };

  CLI::App* genus_cmd =
      app.add_subcommand("genus", "genus number of one type, one mode");
  add_type_flags(genus_cmd);
  genus_cmd->add_option("--method", f.method, "formula | brute | both");
  add_run_flags(genus_cmd);
  add_output_flags(genus_cmd, f);

  CLI::App* table_cmd =
      app.add_subcommand("table", "summary table over all types");
  int max_rank = 4;
  table_cmd->add_option("--mode", f.mode, "group | algebra");
  table_cmd->add_option("--max-rank", max_rank, "largest classical rank");
  add_run_flags(table_cmd);
  add_output_flags(table_cmd, f);

  CLI::App* classes_cmd = app.add_subcommand(
      "classes", "detailed class listing (stabilizer orders, witnesses, descriptors)");
  add_type_flags(classes_cmd);
  add_run_flags(classes_cmd);
  add_output_flags(classes_cmd, f);

  CLI::App* compare_cmd = app.add_subcommand(
      "compare-lattices",
      "coroot lattice vs a coarser lattice: stabilizer-jump strata");
  add_type_flags(compare_cmd, false);
  int coarse_index = 2;
  compare_cmd->add_option("--coarse-index", coarse_index,
                          "coarse lattice = (1/index) * coroot lattice");
  add_run_flags(compare_cmd);
  add_output_flags(compare_cmd, f);

  CLI::App* octo_cmd = app.add_subcommand(
      "check-octonion", "verify the derivation identity t1(xy)=t2(x)y+xt3(y)");
  int samples = 20;
  octo_cmd->add_option("--samples", samples, "number of random parameter vectors");
  octo_cmd->add_option("--seed", f.seed, "RNG seed");
  add_output_flags(octo_cmd, f);

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the full acceptance suite");
  selftest_cmd->add_option("--seed", f.seed, "seed for the property suites");
  add_output_flags(selftest_cmd, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (genus_cmd->parsed()) return emit_genus(f, false);
    if (table_cmd->parsed()) return emit_table(f, max_rank);
    if (classes_cmd->parsed()) return emit_genus(f, true);
    if (compare_cmd->parsed()) return emit_compare(f, coarse_index);
    if (octo_cmd->parsed()) return emit_octonion_check(f, samples);
    if (selftest_cmd->parsed()) return emit_selftest(f);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
