#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylgenus/catalog.hpp"

namespace genus {

struct ClassEntry {
  std::size_t order = 0;
  std::string fingerprint;  // digest hex
  std::size_t fixed_dim = 0;
  std::vector<std::string> witness;  // reduced "p/q" strings
  std::string descriptor;
  bool strongly_regular = false;
};

struct BruteSummary {
  std::size_t count = 0;
  std::vector<int> denominators;
  bool stable = false;
};

// Aggregates the closed-form value and the exhaustive classification for one
// type/mode. A formula/brute disagreement sets `discrepancy`; it is reported,
// never silently resolved.
struct GenusReport {
  std::string type;
  int rank = 0;
  std::string mode;
  std::optional<long long> formula;
  std::optional<BruteSummary> brute;
  std::vector<ClassEntry> classes;
  bool discrepancy = false;
  std::vector<std::string> warnings;

  std::string to_json() const;
  std::string to_markdown() const;
};

GenusReport make_genus_report(GroupType t, ActionMode mode, bool run_formula,
                              bool run_brute, const ClassifyOptions& opts = {});

struct TableRow {
  std::string type;
  int rank = 0;
  std::size_t weyl_order = 0;
  long long formula = 0;
  std::size_t brute = 0;
  bool agree = false;
};

struct TableReport {
  std::string mode;
  std::vector<TableRow> rows;
  std::vector<std::string> warnings;

  std::string to_json() const;
  std::string to_markdown() const;
};

TableReport make_table_report(ActionMode mode, int max_rank,
                              const ClassifyOptions& opts = {});

struct CompareReport {
  std::string type;
  int rank = 0;
  int coarse_index = 1;
  std::size_t fine_classes = 0;
  std::size_t coarse_classes = 0;
  struct Jump {
    std::vector<std::string> witness;
    std::size_t fine_order = 0;
    std::size_t coarse_order = 0;
    std::uint64_t points_seen = 0;
  };
  std::vector<Jump> jumps;

  std::string to_json() const;
  std::string to_markdown() const;
};

// Probes the coroot lattice against the coarser lattice (1/index)*coroot,
// reporting strata where the stabilizer strictly grows.
CompareReport make_compare_report(GroupType t, int coarse_index,
                                  const ClassifyOptions& opts = {});

}  // namespace genus
