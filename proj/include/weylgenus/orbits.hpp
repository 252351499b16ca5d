#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylgenus/lattice.hpp"
#include "weylgenus/weyl.hpp"

namespace genus {

enum class ActionMode { torus, linear };

// The pair (parameter space, Weyl group): torus mode identifies points modulo
// the lattice, linear mode acts on the raw vector space. For the hyperplane
// models (A_n, G_2) `constraint` holds the functional whose kernel carries
// the action.
struct ActionSpace {
  std::shared_ptr<const WeylGroup> group;
  ActionMode mode = ActionMode::linear;
  std::optional<Lattice> lattice;     // required iff mode == torus
  std::optional<QVector> constraint;  // e.g. all-ones: coordinates sum to zero

  std::size_t dim() const { return group->dim(); }
  // Checks: lattice is W-invariant, the constraint is W-invariant, and every
  // generator is orthogonal.
  void validate() const;
};

// Elements fixing the point: exactly in linear mode, modulo the lattice in
// torus mode. Result is closed (checked).
Subgroup stabilizer(const ActionSpace& space, const QVector& point);

// Dimension of the common fixed subspace of H inside the constrained space.
std::size_t fixed_space_dimension(const ActionSpace& space, const Subgroup& h);

// One conjugacy class of isotropy subgroups.
struct OrbitTypeClass {
  Subgroup representative;
  std::size_t fixed_dim = 0;
  QVector witness;            // sample point with this stabilizer
  int first_denominator = 0;  // grid level at which first seen
  bool strongly_regular = false;  // trivial stabilizer
  std::string descriptor;         // attached by catalog; may stay empty

  const Fingerprint& fingerprint() const { return representative.fingerprint(); }
};

struct ClassifyOptions {
  std::vector<int> denominators{4, 8, 12, 24};
  int threads = 0;  // 0: GENUS_THREADS env, else hardware concurrency
  // Steinberg check: every class must equal its reflection closure. Applies
  // to coroot-lattice torus models and linear models; the lattice probe
  // disables it.
  bool check_reflection_closure = true;
  // Re-run every final witness through stabilizer() as an independent check
  // of the integer scan.
  bool check_witnesses = true;
  std::uint64_t max_grid_points = 250'000'000;
};

struct ClassificationReport {
  std::shared_ptr<const WeylGroup> group;  // keeps Subgroup parents alive
  std::vector<OrbitTypeClass> classes;
  std::vector<int> denominators_used;
  bool stable = false;  // last two levels found identical class sets
  std::vector<std::string> warnings;

  std::size_t count() const { return classes.size(); }
};

// Exhaustive stratification over the denominator schedule: enumerate all
// grid points (one fundamental domain in torus mode, the box [-1,1]^dim
// scaled by D in linear mode), keep canonical orbit representatives, compute
// stabilizers, and deduplicate up to conjugacy, merging across levels.
ClassificationReport classify(const ActionSpace& space,
                              const ClassifyOptions& opts = {});

// A stratum where coarsening the lattice strictly enlarges the stabilizer
// (the Weyl-level witness of a disconnected centralizer downstairs).
struct JumpStratum {
  QVector witness;
  std::size_t fine_order = 0;
  std::size_t coarse_order = 0;
  std::uint64_t points_seen = 0;
  std::string fine_digest;
  std::string coarse_digest;
};

struct LatticeComparison {
  std::size_t fine_class_count = 0;
  std::size_t coarse_class_count = 0;
  std::vector<JumpStratum> jumps;
  std::vector<int> denominators_used;
};

// Requires fine <= coarse (every fine generator in coarse) and both lattices
// W-invariant.
LatticeComparison compare_lattices(const std::shared_ptr<const WeylGroup>& group,
                                   const Lattice& fine, const Lattice& coarse,
                                   const std::optional<QVector>& constraint,
                                   const ClassifyOptions& opts = {});

int resolve_thread_count(int requested);

}  // namespace genus
