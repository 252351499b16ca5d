#include "weylgenus/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace genus {

WeylGroup WeylGroup::close_generators(const std::vector<QMatrix>& gens,
                                      std::size_t max_order,
                                      const std::optional<QVector>& constraint) {
  if (gens.empty()) throw std::invalid_argument("close_generators: no generators");
  WeylGroup g;
  g.dim_ = gens[0].dim();
  for (const QMatrix& m : gens) {
    if (m.dim() != g.dim_)
      throw std::invalid_argument("close_generators: dimension mismatch");
    m.inverse();  // throws if singular
  }

  QMatrix id = QMatrix::identity(g.dim_);
  g.elements_.push_back(id);
  g.index_.emplace(id.key(), 0);

  std::vector<ElementId> frontier{0};
  while (!frontier.empty()) {
    // Collect the next frontier, sorted by serialization for determinism.
    std::map<std::string, QMatrix> fresh;
    for (ElementId fid : frontier)
      for (const QMatrix& gen : gens) {
        QMatrix prod = g.elements_[fid] * gen;
        std::string key = prod.key();
        if (!g.index_.count(key) && !fresh.count(key))
          fresh.emplace(std::move(key), std::move(prod));
      }
    frontier.clear();
    for (auto& [key, mat] : fresh) {
      if (g.elements_.size() >= max_order)
        throw ResourceError("close_generators: group too large (bound " +
                            std::to_string(max_order) + ")");
      ElementId nid = static_cast<ElementId>(g.elements_.size());
      g.elements_.push_back(mat);
      g.index_.emplace(key, nid);
      frontier.push_back(nid);
    }
  }

  for (const QMatrix& gen : gens) g.generator_ids_.push_back(*g.lookup(gen));
  g.finalize(constraint);
  return g;
}

void WeylGroup::finalize(const std::optional<QVector>& constraint) {
  const std::size_t n = elements_.size();

  // Dense product table for small groups; F4's 1152 fits comfortably.
  if (n <= 2048) {
    mult_table_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index_.find((elements_[a] * elements_[b]).key());
        if (it == index_.end())
          throw std::logic_error("WeylGroup: closure violated");
        mult_table_[a * n + b] = it->second;
      }
  }

  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = index_.find(elements_[a].inverse().key());
    if (it == index_.end()) throw std::logic_error("WeylGroup: inverse missing");
    inverse_[a] = it->second;
  }

  // Conjugacy classes: orbit partition under conjugation by generators.
  class_label_.assign(n, -1);
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (class_label_[seed] >= 0) continue;
    int label = class_count_++;
    std::vector<ElementId> stack{static_cast<ElementId>(seed)};
    class_label_[seed] = label;
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      for (ElementId gid : generator_ids_) {
        ElementId y = conjugate(gid, x);
        if (class_label_[y] < 0) {
          class_label_[y] = label;
          stack.push_back(y);
        }
      }
    }
  }

  // Reflection test on the parameter space: with a hyperplane constraint,
  // restrict w - I to a kernel basis first.
  std::vector<QVector> kernel_basis;
  if (constraint) {
    std::size_t pivot = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!(*constraint)[i].is_zero()) { pivot = i; break; }
    if (pivot == dim_)
      throw std::invalid_argument("close_generators: zero constraint functional");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == pivot) continue;
      QVector b(dim_);
      b[i] = Frac(1);
      b[pivot] = -(*constraint)[i] / (*constraint)[pivot];
      kernel_basis.push_back(std::move(b));
    }
  }
  is_reflection_.assign(n, 0);
  QMatrix id = QMatrix::identity(dim_);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r;
    if (constraint) {
      std::vector<QVector> moved;
      for (const QVector& b : kernel_basis)
        moved.push_back(elements_[a] * b - b);
      r = rank_of(moved);
    } else {
      r = (elements_[a] - id).rank();
    }
    if (r == 1) {
      is_reflection_[a] = 1;
      reflection_ids_.push_back(static_cast<ElementId>(a));
    }
  }
}

std::optional<ElementId> WeylGroup::lookup(const QMatrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId WeylGroup::product(ElementId a, ElementId b) const {
  if (!mult_table_.empty()) return mult_table_[a * order() + b];
  auto it = index_.find((elements_[a] * elements_[b]).key());
  if (it == index_.end()) throw std::logic_error("WeylGroup: closure violated");
  return it->second;
}

ElementId WeylGroup::inverse(ElementId a) const { return inverse_[a]; }

ElementId WeylGroup::conjugate(ElementId g, ElementId x) const {
  return product(product(g, x), inverse_[g]);
}

std::vector<ElementId> WeylGroup::close_subset(std::vector<ElementId> seeds) const {
  std::vector<char> in(order(), 0);
  in[0] = 1;
  std::vector<ElementId> members{0};
  std::vector<ElementId> stack;
  for (ElementId s : seeds)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      stack.push_back(s);
    }
  // Products with all current members until stable.
  std::size_t head = 0;
  while (head < members.size()) {
    ElementId x = members[head++];
    for (std::size_t i = 0; i < members.size(); ++i) {
      ElementId p = product(x, members[i]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
      ElementId q = product(members[i], x);
      if (!in[q]) {
        in[q] = 1;
        members.push_back(q);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementId> WeylGroup::minimal_generators(
    const std::vector<ElementId>& members) const {
  std::vector<ElementId> gens;
  std::vector<char> covered(order(), 0);
  covered[0] = 1;
  std::size_t covered_count = 1;
  for (ElementId m : members) {
    if (covered[m]) continue;
    gens.push_back(m);
    auto cl = close_subset(gens);
    covered.assign(order(), 0);
    covered_count = cl.size();
    for (ElementId x : cl) covered[x] = 1;
    if (covered_count == members.size()) break;
  }
  return gens;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  if (order != o.order) return order < o.order;
  return class_counts < o.class_counts;
}

std::uint64_t Fingerprint::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(order);
  for (auto& [label, count] : class_counts) {
    mix(static_cast<std::uint64_t>(label));
    mix(static_cast<std::uint64_t>(count));
  }
  return h;
}

std::string Fingerprint::digest_hex() const {
  static const char* hex = "0123456789abcdef";
  std::uint64_t d = digest();
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[d & 0xf];
    d >>= 4;
  }
  return s;
}

namespace {

Fingerprint make_fingerprint(const WeylGroup& g,
                             const std::vector<ElementId>& members) {
  std::map<int, int> counts;
  for (ElementId m : members) counts[g.class_label(m)]++;
  Fingerprint fp;
  fp.order = members.size();
  fp.class_counts.assign(counts.begin(), counts.end());
  return fp;
}

}  // namespace

Subgroup Subgroup::from_ids(const WeylGroup& parent, std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids[0] != 0)
    throw std::invalid_argument("Subgroup: missing identity");
  std::vector<char> in(parent.order(), 0);
  for (ElementId id : ids) in[id] = 1;
  for (ElementId a : ids) {
    if (!in[parent.inverse(a)])
      throw std::invalid_argument("Subgroup: id set not closed under inverse");
    for (ElementId b : ids)
      if (!in[parent.product(a, b)])
        throw std::invalid_argument("Subgroup: id set not closed under product");
  }
  return from_ids_unchecked(parent, std::move(ids));
}

Subgroup Subgroup::from_ids_unchecked(const WeylGroup& parent,
                                      std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  Subgroup s;
  s.parent_ = &parent;
  s.members_ = std::move(ids);
  s.fp_ = make_fingerprint(parent, s.members_);
  return s;
}

bool Subgroup::contains(ElementId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

ConjugacyWitness are_conjugate(const Subgroup& h1, const Subgroup& h2) {
  if (&h1.parent() != &h2.parent())
    throw std::invalid_argument("are_conjugate: different parent groups");
  ConjugacyWitness out;
  if (!(h1.fingerprint() == h2.fingerprint())) return out;
  const WeylGroup& g = h1.parent();
  std::vector<ElementId> gens = g.minimal_generators(h1.members());
  if (gens.empty()) {  // trivial subgroup; fingerprints matched, so h2 too
    out.conjugate = true;
    out.witness = 0;
    return out;
  }
  for (ElementId cand = 0; cand < static_cast<ElementId>(g.order()); ++cand) {
    bool ok = true;
    for (ElementId x : gens)
      if (!h2.contains(g.conjugate(cand, x))) {
        ok = false;
        break;
      }
    // Generator images inside h2 plus equal order force equality.
    if (ok) {
      out.conjugate = true;
      out.witness = cand;
      return out;
    }
  }
  return out;
}

Subgroup reflection_closure(const Subgroup& h) {
  const WeylGroup& g = h.parent();
  std::vector<ElementId> seeds;
  for (ElementId m : h.members())
    if (g.is_reflection(m)) seeds.push_back(m);
  return Subgroup::from_ids_unchecked(g, g.close_subset(std::move(seeds)));
}

}  // namespace genus
