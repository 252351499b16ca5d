#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weylgenus/orbits.hpp"

namespace genus {

enum class Family { A, B, C, D, G2, F4 };

struct GroupType {
  Family family;
  int rank;  // fixed: 2 for G2, 4 for F4
};

Family family_from_string(const std::string& s);
std::string family_name(Family f);
// "group" (conjugation action on T, torus mode) or "algebra" (adjoint action
// on the Cartan subalgebra, linear mode).
ActionMode mode_from_string(const std::string& s);
std::string mode_name(ActionMode m);

// Supported rank windows (closure order stays under the weyl bound).
bool rank_supported(GroupType t);
// Degenerate ranks (B1, C1, D2, D3) are allowed but flagged; they power the
// exceptional-isomorphism cross-checks.
bool rank_degenerate(GroupType t);

// Cached, shared Weyl model for the type. Throws std::invalid_argument on
// unsupported ranks.
std::shared_ptr<const WeylGroup> weyl_group(GroupType t);

struct TypeModel {
  GroupType type;
  ActionSpace space;
  std::vector<std::string> warnings;
};

// Parameter space, Weyl generators, and coroot lattice (torus mode) of the
// type, in the paper's own coordinates.
TypeModel build(GroupType t, ActionMode mode);

// Closed-form genus count for the type and mode.
long long formula_genus(GroupType t, ActionMode mode);

// Expected Weyl group order for the type.
std::size_t expected_weyl_order(GroupType t);

// One stratum of the paper's case analysis. Classical strata carry the
// special-coordinate counts and the generic block partition; exceptional
// strata are identified by their case label.
struct StratumDescriptor {
  std::vector<int> blocks;    // generic equal-value block sizes, non-increasing
  int n1 = 0;                 // total special coordinates
  int n1p = 0;                // first-kind special coordinates (parameter 0)
  bool exotic = false;        // D_{2k} H-type stratum; blocks lists 2k_i
  std::string label;          // exceptional case label, e.g. "1(c)"
  std::string structure;      // fixed structure string for exceptional cases
};

std::string render_descriptor(GroupType t, ActionMode mode,
                              const StratumDescriptor& s);

struct PaperStratum {
  StratumDescriptor stratum;
  QVector witness;     // a point realizing the stratum
  std::string rendered;
};

// All strata of the paper's analysis for the type/mode, each with a witness.
std::vector<PaperStratum> paper_strata(GroupType t, ActionMode mode);

// Matches computed classes to paper strata via witness stabilizers.
// Unmatched classes are labeled "unlisted"; overlapping strata (distinct
// paper strata whose stabilizers turn out conjugate) are surfaced in the
// report warnings, never merged away.
void attach_descriptors(ClassificationReport& report, const ActionSpace& space,
                        GroupType t, ActionMode mode);

}  // namespace genus
