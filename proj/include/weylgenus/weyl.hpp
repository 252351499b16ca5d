#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylgenus/qlinalg.hpp"

namespace genus {

using ElementId = std::int32_t;

// Thrown when a closure or grid exceeds its configured size bound.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fully enumerated finite matrix group. Element 0 is the identity; ids are
// assigned by breadth-first closure with each new frontier sorted by the
// matrices' canonical serialization, so the ordering is deterministic.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 1'000'000;

  // `constraint`, when given, is a linear functional whose kernel is the
  // parameter space; reflections are detected on that subspace (the A_n and
  // G_2 models act on a hyperplane of the ambient coordinates).
  static WeylGroup close_generators(
      const std::vector<QMatrix>& gens,
      std::size_t max_order = kDefaultMaxOrder,
      const std::optional<QVector>& constraint = std::nullopt);

  // Subgroups hold pointers into their parent; keep identity semantics.
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;
  WeylGroup(WeylGroup&&) = default;
  WeylGroup& operator=(WeylGroup&&) = default;

  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return dim_; }
  const QMatrix& element(ElementId id) const { return elements_[id]; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  std::optional<ElementId> lookup(const QMatrix& m) const;
  ElementId product(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId conjugate(ElementId g, ElementId x) const;  // g x g^-1

  // Conjugacy-class label of an element, constant on classes.
  int class_label(ElementId id) const { return class_label_[id]; }
  int class_count() const { return class_count_; }

  // Elements acting as linear reflections on the parameter space:
  // rank(w - I) == 1 there.
  const std::vector<ElementId>& reflection_ids() const { return reflection_ids_; }
  bool is_reflection(ElementId id) const { return is_reflection_[id]; }

  // Closure of an id set under product (BFS over the given seeds).
  std::vector<ElementId> close_subset(std::vector<ElementId> seeds) const;

  // Greedy small generating set of a closed member list.
  std::vector<ElementId> minimal_generators(
      const std::vector<ElementId>& members) const;

 private:
  WeylGroup() = default;

  std::size_t dim_ = 0;
  std::vector<QMatrix> elements_;
  std::vector<ElementId> generator_ids_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementId> inverse_;
  std::vector<int> class_label_;
  int class_count_ = 0;
  std::vector<char> is_reflection_;
  std::vector<ElementId> reflection_ids_;
  // Dense product table for small groups; empty means products are computed
  // by matrix multiplication plus hash lookup.
  std::vector<ElementId> mult_table_;

  void finalize(const std::optional<QVector>& constraint);
};

// (order, multiset of element class labels); invariant under conjugation.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::pair<int, int>> class_counts;  // (label, count), sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  bool operator<(const Fingerprint& o) const;
  std::uint64_t digest() const;  // stable FNV-1a over the contents
  std::string digest_hex() const;
};

// Sorted element-id set closed under product and inverse inside a parent
// WeylGroup.
class Subgroup {
 public:
  // Verifies closure (identity, products, inverses); throws on failure.
  static Subgroup from_ids(const WeylGroup& parent, std::vector<ElementId> ids);
  // Skips the closure check; for callers that construct closed sets.
  static Subgroup from_ids_unchecked(const WeylGroup& parent,
                                     std::vector<ElementId> ids);

  const WeylGroup& parent() const { return *parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ElementId id) const;
  const Fingerprint& fingerprint() const { return fp_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const WeylGroup* parent_ = nullptr;
  std::vector<ElementId> members_;  // sorted
  Fingerprint fp_;
};

struct ConjugacyWitness {
  bool conjugate = false;
  std::optional<ElementId> witness;  // g with g H1 g^-1 = H2
};

// Scans parent elements with a fingerprint pre-filter and early exit.
ConjugacyWitness are_conjugate(const Subgroup& h1, const Subgroup& h2);

// Subgroup generated by H's reflections (H intersected with the parent's
// reflection set, closed under product).
Subgroup reflection_closure(const Subgroup& h);

}  // namespace genus
