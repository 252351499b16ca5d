#include "weylgenus/report.hpp"

#include <json.hpp>

namespace genus {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> witness_strings(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
  return out;
}

ClassEntry to_entry(const OrbitTypeClass& c) {
  ClassEntry e;
  e.order = c.representative.order();
  e.fingerprint = c.fingerprint().digest_hex();
  e.fixed_dim = c.fixed_dim;
  e.witness = witness_strings(c.witness);
  e.descriptor = c.descriptor;
  e.strongly_regular = c.strongly_regular;
  return e;
}

ordered_json entry_json(const ClassEntry& e) {
  ordered_json j;
  j["order"] = e.order;
  j["fingerprint"] = e.fingerprint;
  j["fixed_dim"] = e.fixed_dim;
  j["witness"] = e.witness;
  j["descriptor"] = e.descriptor;
  j["strongly_regular"] = e.strongly_regular;
  return j;
}

}  // namespace

GenusReport make_genus_report(GroupType t, ActionMode mode, bool run_formula,
                              bool run_brute, const ClassifyOptions& opts) {
  GenusReport rep;
  rep.type = family_name(t.family);
  rep.rank = t.rank;
  rep.mode = mode_name(mode);
  if (run_formula) rep.formula = formula_genus(t, mode);
  if (run_brute) {
    TypeModel model = build(t, mode);
    for (const std::string& w : model.warnings) rep.warnings.push_back(w);
    ClassificationReport cls = classify(model.space, opts);
    attach_descriptors(cls, model.space, t, mode);
    BruteSummary brute;
    brute.count = cls.classes.size();
    brute.denominators = cls.denominators_used;
    brute.stable = cls.stable;
    rep.brute = brute;
    for (const OrbitTypeClass& c : cls.classes) rep.classes.push_back(to_entry(c));
    for (const std::string& w : cls.warnings) rep.warnings.push_back(w);
  }
  rep.discrepancy =
      rep.formula && rep.brute &&
      static_cast<long long>(rep.brute->count) != *rep.formula;
  return rep;
}

std::string GenusReport::to_json() const {
  ordered_json j;
  j["schema_version"] = 1;
  j["type"] = type;
  j["rank"] = rank;
  j["mode"] = mode;
  j["formula"] = formula ? ordered_json(*formula) : ordered_json(nullptr);
  if (brute) {
    ordered_json b;
    b["count"] = brute->count;
    b["denominators"] = brute->denominators;
    b["stable"] = brute->stable;
    j["brute"] = b;
  } else {
    j["brute"] = nullptr;
  }
  ordered_json cls = ordered_json::array();
  for (const ClassEntry& e : classes) cls.push_back(entry_json(e));
  j["classes"] = cls;
  j["discrepancy"] = discrepancy;
  j["warnings"] = warnings;
  return j.dump(2);
}

std::string GenusReport::to_markdown() const {
  std::string md = "# Genus report: " + type + std::to_string(rank) + " (" +
                   mode + " mode)\n\n";
  if (formula) md += "- formula: " + std::to_string(*formula) + "\n";
  if (brute) {
    md += "- brute-force classes: " + std::to_string(brute->count) +
          (brute->stable ? " (stable)" : " (NOT stable)") + "\n";
    md += "- denominators:";
    for (int d : brute->denominators) md += " " + std::to_string(d);
    md += "\n";
  }
  md += std::string("- discrepancy: ") + (discrepancy ? "YES" : "no") + "\n";
  if (!classes.empty()) {
    md += "\n| order | fixed dim | strongly regular | witness | stabilizer |\n";
    md += "|---|---|---|---|---|\n";
    for (const ClassEntry& e : classes) {
      std::string wit = "(";
      for (std::size_t i = 0; i < e.witness.size(); ++i)
        wit += (i ? ", " : "") + e.witness[i];
      wit += ")";
      md += "| " + std::to_string(e.order) + " | " +
            std::to_string(e.fixed_dim) + " | " +
            (e.strongly_regular ? "yes" : "no") + " | " + wit + " | " +
            e.descriptor + " |\n";
    }
  }
  for (const std::string& w : warnings) md += "\n> warning: " + w + "\n";
  return md;
}

TableReport make_table_report(ActionMode mode, int max_rank,
                              const ClassifyOptions& opts) {
  TableReport table;
  table.mode = mode_name(mode);
  std::vector<GroupType> types;
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::A, r});
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::B, r});
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::C, r});
  for (int r = 2; r <= max_rank; ++r) types.push_back({Family::D, r});
  if (max_rank >= 2) types.push_back({Family::G2, 2});
  if (max_rank >= 4) types.push_back({Family::F4, 4});
  for (GroupType t : types) {
    if (!rank_supported(t)) continue;
    GenusReport rep = make_genus_report(t, mode, true, true, opts);
    TableRow row;
    row.type = rep.type + (t.family == Family::A || t.family == Family::B ||
                                   t.family == Family::C || t.family == Family::D
                               ? std::to_string(t.rank)
                               : "");
    row.rank = t.rank;
    row.weyl_order = weyl_group(t)->order();
    row.formula = *rep.formula;
    row.brute = rep.brute->count;
    row.agree = !rep.discrepancy;
    table.rows.push_back(row);
    for (const std::string& w : rep.warnings)
      if (w.rfind("degenerate rank", 0) == 0)
        table.warnings.push_back(w);
  }
  return table;
}

std::string TableReport::to_json() const {
  ordered_json j;
  j["schema_version"] = 1;
  j["mode"] = mode;
  ordered_json rows = ordered_json::array();
  for (const TableRow& r : this->rows) {
    ordered_json row;
    row["type"] = r.type;
    row["rank"] = r.rank;
    row["weyl_order"] = r.weyl_order;
    row["formula"] = r.formula;
    row["brute"] = r.brute;
    row["agree"] = r.agree;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["warnings"] = warnings;
  return j.dump(2);
}

std::string TableReport::to_markdown() const {
  std::string md = "# Genus numbers (" + mode + " mode)\n\n";
  md += "| type | Weyl group order | formula | brute force | agree? |\n";
  md += "|---|---|---|---|---|\n";
  for (const TableRow& r : rows)
    md += "| " + r.type + " | " + std::to_string(r.weyl_order) + " | " +
          std::to_string(r.formula) + " | " + std::to_string(r.brute) + " | " +
          (r.agree ? "yes" : "NO (flagged)") + " |\n";
  for (const std::string& w : warnings) md += "\n> warning: " + w + "\n";
  return md;
}

CompareReport make_compare_report(GroupType t, int coarse_index,
                                  const ClassifyOptions& opts) {
  if (coarse_index < 1)
    throw std::invalid_argument("compare: coarse index must be >= 1");
  TypeModel model = build(t, ActionMode::torus);
  const Lattice& fine = *model.space.lattice;
  std::vector<QVector> coarse_gens;
  for (const QVector& g : fine.generators())
    coarse_gens.push_back(Frac(1, coarse_index) * g);
  Lattice coarse = Lattice::from_generators(coarse_gens);
  LatticeComparison cmp = compare_lattices(model.space.group, fine, coarse,
                                           model.space.constraint, opts);
  CompareReport rep;
  rep.type = family_name(t.family);
  rep.rank = t.rank;
  rep.coarse_index = coarse_index;
  rep.fine_classes = cmp.fine_class_count;
  rep.coarse_classes = cmp.coarse_class_count;
  for (const JumpStratum& js : cmp.jumps) {
    CompareReport::Jump j;
    j.witness = witness_strings(js.witness);
    j.fine_order = js.fine_order;
    j.coarse_order = js.coarse_order;
    j.points_seen = js.points_seen;
    rep.jumps.push_back(j);
  }
  return rep;
}

std::string CompareReport::to_json() const {
  ordered_json j;
  j["schema_version"] = 1;
  j["type"] = type;
  j["rank"] = rank;
  j["coarse_index"] = coarse_index;
  j["fine_classes"] = fine_classes;
  j["coarse_classes"] = coarse_classes;
  ordered_json jumps_json = ordered_json::array();
  for (const Jump& jp : jumps) {
    ordered_json row;
    row["witness"] = jp.witness;
    row["fine_order"] = jp.fine_order;
    row["coarse_order"] = jp.coarse_order;
    row["points_seen"] = jp.points_seen;
    jumps_json.push_back(row);
  }
  j["jumps"] = jumps_json;
  return j.dump(2);
}

std::string CompareReport::to_markdown() const {
  std::string md = "# Lattice comparison: " + type + std::to_string(rank) +
                   ", coarse = (1/" + std::to_string(coarse_index) +
                   ") * coroot lattice\n\n";
  md += "- classes with the coroot lattice: " + std::to_string(fine_classes) + "\n";
  md += "- classes with the coarse lattice: " + std::to_string(coarse_classes) + "\n";
  md += "- jump strata (stabilizer strictly grows): " +
        std::to_string(jumps.size()) + "\n";
  for (const Jump& jp : jumps) {
    std::string wit = "(";
    for (std::size_t i = 0; i < jp.witness.size(); ++i)
      wit += (i ? ", " : "") + jp.witness[i];
    wit += ")";
    md += "  - at " + wit + ": stabilizer order " +
          std::to_string(jp.fine_order) + " -> " +
          std::to_string(jp.coarse_order) + " (" +
          std::to_string(jp.points_seen) + " grid points)\n";
  }
  return md;
}

}  // namespace genus
