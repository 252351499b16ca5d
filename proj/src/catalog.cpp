#include "weylgenus/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "weylgenus/partitions.hpp"

namespace genus {

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  if (s == "F4") return Family::F4;
  throw std::invalid_argument("unknown type '" + s + "' (expected A,B,C,D,G2,F4)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
  }
  return "?";
}

ActionMode mode_from_string(const std::string& s) {
  if (s == "group") return ActionMode::torus;
  if (s == "algebra") return ActionMode::linear;
  throw std::invalid_argument("unknown mode '" + s + "' (expected group|algebra)");
}

std::string mode_name(ActionMode m) {
  return m == ActionMode::torus ? "group" : "algebra";
}

bool rank_supported(GroupType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1 && t.rank <= 7;
    case Family::B:
    case Family::C: return t.rank >= 1 && t.rank <= 6;
    case Family::D: return t.rank >= 2 && t.rank <= 6;
    case Family::G2: return t.rank == 2;
    case Family::F4: return t.rank == 4;
  }
  return false;
}

bool rank_degenerate(GroupType t) {
  return (t.family == Family::B && t.rank == 1) ||
         (t.family == Family::C && t.rank == 1) ||
         (t.family == Family::D && (t.rank == 2 || t.rank == 3));
}

std::size_t expected_weyl_order(GroupType t) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case Family::A: return fact(t.rank + 1);
    case Family::B:
    case Family::C: return (std::size_t{1} << t.rank) * fact(t.rank);
    case Family::D: return (std::size_t{1} << (t.rank - 1)) * fact(t.rank);
    case Family::G2: return 12;
    case Family::F4: return 1152;
  }
  return 0;
}

namespace {

QMatrix permutation(std::size_t dim, std::size_t i, std::size_t j) {
  QMatrix m = QMatrix::identity(dim);
  m.at(i, i) = Frac(0);
  m.at(j, j) = Frac(0);
  m.at(i, j) = Frac(1);
  m.at(j, i) = Frac(1);
  return m;
}

QMatrix diagonal(const std::vector<int>& signs) {
  QMatrix m(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) m.at(i, i) = Frac(signs[i]);
  return m;
}

QMatrix negated_identity(std::size_t dim) {
  return diagonal(std::vector<int>(dim, -1));
}

// Triality matrices of the F4 model: A is the t2-map, B the t3-map.
QMatrix f4_triality_a() {
  Frac h(1, 2);
  QMatrix m(4);
  const int rows[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = h * Frac(rows[i][j]);
  return m;
}

QMatrix f4_triality_b() {
  Frac h(1, 2);
  QMatrix m(4);
  const int rows[4][4] = {{1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = h * Frac(rows[i][j]);
  return m;
}

std::vector<QMatrix> weyl_generators(GroupType t) {
  std::vector<QMatrix> gens;
  switch (t.family) {
    case Family::A: {
      std::size_t dim = t.rank + 1;
      for (std::size_t i = 0; i + 1 < dim; ++i)
        gens.push_back(permutation(dim, i, i + 1));
      break;
    }
    case Family::B:
    case Family::C: {
      std::size_t dim = t.rank;
      for (std::size_t i = 0; i + 1 < dim; ++i)
        gens.push_back(permutation(dim, i, i + 1));
      std::vector<int> signs(dim, 1);
      signs[0] = -1;
      gens.push_back(diagonal(signs));
      break;
    }
    case Family::D: {
      std::size_t dim = t.rank;
      for (std::size_t i = 0; i + 1 < dim; ++i)
        gens.push_back(permutation(dim, i, i + 1));
      std::vector<int> signs(dim, 1);
      signs[0] = -1;
      signs[1] = -1;
      gens.push_back(diagonal(signs));
      break;
    }
    case Family::G2: {
      gens.push_back(permutation(3, 0, 1));
      gens.push_back(permutation(3, 1, 2));
      gens.push_back(negated_identity(3));
      break;
    }
    case Family::F4: {
      gens.push_back(permutation(4, 0, 1));
      gens.push_back(permutation(4, 1, 2));
      gens.push_back(permutation(4, 2, 3));
      gens.push_back(diagonal({-1, -1, 1, 1}));
      gens.push_back(diagonal({-1, 1, 1, 1}));
      gens.push_back(f4_triality_a());
      break;
    }
  }
  return gens;
}

QVector unit(std::size_t dim, std::size_t i, std::int64_t v = 1) {
  QVector e(dim);
  e[i] = Frac(v);
  return e;
}

// D_n lattice: integer vectors with even coordinate sum.
std::vector<QVector> d_lattice_generators(std::size_t n) {
  std::vector<QVector> gens;
  if (n == 1) {
    gens.push_back(unit(1, 0, 2));
    return gens;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    QVector g(n);
    g[i] = Frac(1);
    g[i + 1] = Frac(-1);
    gens.push_back(g);
  }
  QVector last(n);
  last[n - 2] = Frac(1);
  last[n - 1] = Frac(1);
  gens.push_back(last);
  return gens;
}

// Root lattice of A_{d-1} inside the zero-sum hyperplane of Q^d.
std::vector<QVector> sum_zero_lattice_generators(std::size_t d) {
  std::vector<QVector> gens;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    QVector g(d);
    g[i] = Frac(1);
    g[i + 1] = Frac(-1);
    gens.push_back(g);
  }
  return gens;
}

std::vector<QVector> coroot_lattice_generators(GroupType t) {
  switch (t.family) {
    case Family::A: return sum_zero_lattice_generators(t.rank + 1);
    case Family::B: return d_lattice_generators(t.rank);
    case Family::C: {
      std::vector<QVector> gens;
      for (int i = 0; i < t.rank; ++i) gens.push_back(unit(t.rank, i));
      return gens;
    }
    case Family::D: return d_lattice_generators(t.rank);
    case Family::G2: return sum_zero_lattice_generators(3);
    case Family::F4: return d_lattice_generators(4);
  }
  return {};
}

struct CacheKey {
  Family family;
  int rank;
  bool operator<(const CacheKey& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

}  // namespace

std::shared_ptr<const WeylGroup> weyl_group(GroupType t) {
  if (!rank_supported(t))
    throw std::invalid_argument("unsupported rank " + std::to_string(t.rank) +
                                " for type " + family_name(t.family));
  static std::mutex mu;
  static std::map<CacheKey, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  CacheKey key{t.family, t.rank};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::optional<QVector> constraint;
  if (t.family == Family::A || t.family == Family::G2) {
    std::size_t dim = t.family == Family::A ? t.rank + 1 : 3;
    QVector ones(dim);
    for (std::size_t i = 0; i < dim; ++i) ones[i] = Frac(1);
    constraint = ones;
  }
  auto group = std::make_shared<WeylGroup>(WeylGroup::close_generators(
      weyl_generators(t), WeylGroup::kDefaultMaxOrder, constraint));
  if (group->order() != expected_weyl_order(t))
    throw std::logic_error("catalog: Weyl order mismatch for " +
                           family_name(t.family) + std::to_string(t.rank));
  if (t.family == Family::F4 && !group->lookup(f4_triality_b()))
    throw std::logic_error("catalog: F4 closure misses the t3 triality map");
  cache.emplace(key, group);
  return group;
}

TypeModel build(GroupType t, ActionMode mode) {
  TypeModel model;
  model.type = t;
  model.space.group = weyl_group(t);
  model.space.mode = mode;
  std::size_t dim = model.space.group->dim();
  if (t.family == Family::A || t.family == Family::G2) {
    QVector ones(dim);
    for (std::size_t i = 0; i < dim; ++i) ones[i] = Frac(1);
    model.space.constraint = ones;
  }
  if (mode == ActionMode::torus)
    model.space.lattice = Lattice::from_generators(coroot_lattice_generators(t));
  if (rank_degenerate(t))
    model.warnings.push_back(
        "degenerate rank " + family_name(t.family) + std::to_string(t.rank) +
        ": formulas overlap at this rank; brute-force counts are authoritative");
  model.space.validate();
  return model;
}

long long formula_genus(GroupType t, ActionMode mode) {
  if (!rank_supported(t))
    throw std::invalid_argument("unsupported rank for formula_genus");
  const int n = t.rank;
  auto p = [](int k) { return partition_count(k); };
  if (mode == ActionMode::torus) {
    switch (t.family) {
      case Family::A: return p(n + 1);
      case Family::B: {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += static_cast<long long>(i + 1) * p(n - i);
        return s;
      }
      case Family::C: {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += static_cast<long long>(i / 2 + 1) * p(n - i);
        return s;
      }
      case Family::D: {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += static_cast<long long>(i / 2 + 1) * p(n - i);
        if (n % 2 == 0) s += p(n / 2);
        return s;
      }
      case Family::G2: return 6;
      case Family::F4: return 17;
    }
  } else {
    switch (t.family) {
      case Family::A: return p(n + 1);
      case Family::B:
      case Family::C: {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += p(n - i);
        return s;
      }
      case Family::D: {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += p(n - i);
        if (n % 2 == 0) s += p(n / 2);
        return s;
      }
      case Family::G2: return 4;
      case Family::F4: return 12;
    }
  }
  return -1;
}

namespace {

std::string sub(const std::string& base, int k) {
  return base + "_" + std::to_string(k);
}

std::string z2_factor(int exponent, int sym) {
  return "((Z/2)^" + std::to_string(exponent) + " ⋊ " + sub("S", sym) + ")";
}

std::string join_blocks(const std::vector<int>& blocks, std::string sep,
                        std::vector<std::string> head) {
  std::vector<std::string> parts = std::move(head);
  for (int b : blocks) parts.push_back(sub("S", b));
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string render_descriptor(GroupType t, ActionMode mode,
                              const StratumDescriptor& s) {
  if (!s.label.empty()) {
    // Exceptional case: fixed structure string from the paper's analysis.
    return s.structure + " [case " + s.label + "]";
  }
  if (s.exotic) {
    if (t.family != Family::D || t.rank % 2 != 0 || s.n1 != 0)
      throw std::invalid_argument("render_descriptor: inconsistent exotic stratum");
    std::string out = "H_{" + std::to_string(s.blocks.front()) + "}";
    for (std::size_t i = 1; i < s.blocks.size(); ++i)
      out += " · " + sub("S", s.blocks[i]);
    return out;
  }
  if (s.n1 < s.n1p || s.n1p < 0)
    throw std::invalid_argument("render_descriptor: inconsistent stratum counts");
  std::vector<std::string> head;
  switch (t.family) {
    case Family::A:
      if (s.n1 != 0)
        throw std::invalid_argument("render_descriptor: A-type has no special coordinates");
      break;
    case Family::B:
      if (mode == ActionMode::torus) {
        if (s.n1p > 0) head.push_back(z2_factor(s.n1p, s.n1p));
        if (s.n1 - s.n1p > 0) head.push_back(z2_factor(s.n1 - s.n1p - 1, s.n1 - s.n1p));
      } else if (s.n1 > 0) {
        head.push_back(z2_factor(s.n1, s.n1));
      }
      break;
    case Family::C:
      if (mode == ActionMode::torus) {
        if (s.n1p > 0) head.push_back(z2_factor(s.n1p, s.n1p));
        if (s.n1 - s.n1p > 0) head.push_back(z2_factor(s.n1 - s.n1p, s.n1 - s.n1p));
      } else if (s.n1 > 0) {
        head.push_back(z2_factor(s.n1, s.n1));
      }
      break;
    case Family::D:
      if (mode == ActionMode::torus) {
        if (s.n1p > 0) head.push_back(z2_factor(s.n1p - 1, s.n1p));
        if (s.n1 - s.n1p > 0) head.push_back(z2_factor(s.n1 - s.n1p - 1, s.n1 - s.n1p));
      } else if (s.n1 > 0) {
        head.push_back(z2_factor(s.n1 - 1, s.n1));
      }
      break;
    default:
      throw std::invalid_argument("render_descriptor: exceptional types use case labels");
  }
  return join_blocks(s.blocks, " × ", std::move(head));
}

namespace {

// Generic block values: distinct odd-prime reciprocals keep every coincidence
// pattern exact (no two equal, negated, or congruent mod 1).
const std::int64_t kGenericPrimes[] = {5, 7, 11, 13, 17, 19, 23, 29};

QVector classical_witness(GroupType t, ActionMode mode,
                          const StratumDescriptor& s, std::size_t dim) {
  QVector w(dim);
  std::size_t pos = 0;
  if (s.exotic) {
    // First block in the (a,...,a,-a) shape, remaining blocks constant.
    for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
      Frac v(1, kGenericPrimes[bi]);
      int len = s.blocks[bi];
      for (int j = 0; j < len; ++j) {
        Frac entry = (bi == 0 && j == len - 1) ? -v : v;
        w[pos++] = entry;
      }
    }
    return w;
  }
  for (int j = 0; j < s.n1p; ++j) w[pos++] = Frac(0);
  for (int j = 0; j < s.n1 - s.n1p; ++j) w[pos++] = Frac(1, 2);
  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
    Frac v(1, kGenericPrimes[bi]);
    for (int j = 0; j < s.blocks[bi]; ++j) w[pos++] = v;
  }
  (void)mode;
  return w;
}

QVector a_type_witness(const std::vector<int>& blocks, std::size_t dim) {
  QVector w(dim);
  std::size_t pos = 0;
  Frac mean;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    Frac v(1, kGenericPrimes[bi]);
    mean += Frac(blocks[bi]) * v;
    for (int j = 0; j < blocks[bi]; ++j) w[pos++] = v;
  }
  mean /= Frac(static_cast<std::int64_t>(dim));
  for (std::size_t i = 0; i < dim; ++i) w[i] -= mean;
  return w;
}

PaperStratum make_classical(GroupType t, ActionMode mode, StratumDescriptor s,
                            std::size_t dim) {
  PaperStratum ps;
  ps.witness = t.family == Family::A ? a_type_witness(s.blocks, dim)
                                     : classical_witness(t, mode, s, dim);
  ps.rendered = render_descriptor(t, mode, s);
  ps.stratum = std::move(s);
  return ps;
}

PaperStratum make_case(const std::string& label, const std::string& structure,
                       std::vector<Frac> witness) {
  PaperStratum ps;
  ps.stratum.label = label;
  ps.stratum.structure = structure;
  ps.witness = QVector(std::move(witness));
  ps.rendered = ps.stratum.structure + " [case " + label + "]";
  return ps;
}

Frac fr(std::int64_t n, std::int64_t d = 1) { return Frac(n, d); }

std::vector<PaperStratum> g2_strata(ActionMode mode) {
  std::vector<PaperStratum> out;
  if (mode == ActionMode::torus) {
    out.push_back(make_case("(a)", "1", {fr(1, 7), fr(2, 7), fr(-3, 7)}));
    out.push_back(make_case("(b)", "S_3 ⋊ S_2", {fr(0), fr(0), fr(0)}));
    out.push_back(make_case("(c)", "S_3", {fr(1, 3), fr(1, 3), fr(-2, 3)}));
    out.push_back(make_case("(d)", "S_2", {fr(1, 5), fr(1, 5), fr(-2, 5)}));
    out.push_back(make_case("(e)", "S_2 ⋊ S_2", {fr(1, 2), fr(1, 2), fr(-1)}));
    out.push_back(make_case("(f)", "Z/2", {fr(0), fr(1, 5), fr(-1, 5)}));
  } else {
    out.push_back(make_case("(a)", "S_3 ⋊ S_2", {fr(0), fr(0), fr(0)}));
    out.push_back(make_case("(b)", "S_2", {fr(1), fr(1), fr(-2)}));
    out.push_back(make_case("(c)", "1", {fr(1), fr(2), fr(-3)}));
    out.push_back(make_case("(d)", "Z/2", {fr(0), fr(1), fr(-1)}));
  }
  return out;
}

std::vector<PaperStratum> f4_strata(ActionMode mode) {
  std::vector<PaperStratum> out;
  if (mode == ActionMode::torus) {
    out.push_back(make_case("1(a)", "((Z/2)^3 ⋊ S_4) ⋊ S_3",
                            {fr(0), fr(0), fr(0), fr(0)}));
    out.push_back(make_case("1(b)", "((Z/2)^3 ⋊ S_4) ⋊ {1,τ3}",
                            {fr(1, 2), fr(1, 2), fr(1, 2), fr(1, 2)}));
    out.push_back(make_case("1(c)", "((Z/2)^2 ⋊ S_3) ⋊ {1,τ1}",
                            {fr(0), fr(0), fr(0), fr(1, 2)}));
    out.push_back(make_case("1(d)", "(Z/2)^2 ⋊ S_3",
                            {fr(1, 2), fr(1, 2), fr(1, 2), fr(0)}));
    out.push_back(make_case("1(e)", "((Z/2 ⋊ S_2) × (Z/2 ⋊ S_2)) ⋊ S_3",
                            {fr(0), fr(0), fr(1, 2), fr(1, 2)}));
    out.push_back(make_case("1(h)", "((Z/2 ⋊ S_2) × S_2) ⋊ S_3",
                            {fr(0), fr(0), fr(1, 5), fr(1, 5)}));
    out.push_back(make_case("1(i)", "((Z/2 ⋊ S_2) × S_2) ⋊ {1,τ1}",
                            {fr(1, 2), fr(1, 2), fr(1, 5), fr(1, 5)}));
    out.push_back(make_case("1(j)", "S_3 ⋊ {1,τ1}",
                            {fr(0), fr(1, 5), fr(1, 5), fr(1, 5)}));
    out.push_back(make_case("1(k)", "S_3",
                            {fr(1, 2), fr(1, 5), fr(1, 5), fr(1, 5)}));
    out.push_back(make_case("1(l)", "(Z/2 ⋊ S_2) ⋊ {1,τ1}",
                            {fr(0), fr(0), fr(1, 5), fr(1, 7)}));
    out.push_back(make_case("1(m)", "Z/2 ⋊ S_2",
                            {fr(1, 2), fr(1, 2), fr(1, 5), fr(1, 7)}));
    out.push_back(make_case("1(n)", "S_2 ⋊ {1,τ1}",
                            {fr(0), fr(1, 5), fr(1, 5), fr(1, 7)}));
    out.push_back(make_case("1(n')", "S_2 ⋊ S_3",
                            {fr(0), fr(1, 8), fr(1, 8), fr(1, 4)}));
    out.push_back(make_case("1(o)", "S_2",
                            {fr(1, 2), fr(1, 5), fr(1, 5), fr(1, 7)}));
    out.push_back(make_case("1(p)", "{1,τ1}",
                            {fr(0), fr(1, 5), fr(1, 7), fr(1, 11)}));
    out.push_back(make_case("1(p')", "S_3",
                            {fr(0), fr(1, 5), fr(1, 7), fr(12, 35)}));
    out.push_back(make_case("2", "1 (strongly regular)",
                            {fr(1, 5), fr(1, 7), fr(1, 11), fr(1, 13)}));
  } else {
    out.push_back(make_case("(1)", "((Z/2)^3 ⋊ S_4) ⋊ S_3",
                            {fr(0), fr(0), fr(0), fr(0)}));
    out.push_back(make_case("(2)", "((Z/2)^2 ⋊ S_3) ⋊ {1,τ1}",
                            {fr(0), fr(0), fr(0), fr(1)}));
    out.push_back(make_case("(3)", "((Z/2 ⋊ S_2) × S_2) ⋊ S_3",
                            {fr(0), fr(0), fr(1), fr(1)}));
    out.push_back(make_case("(4)", "(Z/2 ⋊ S_2) ⋊ {1,τ1}",
                            {fr(0), fr(0), fr(1), fr(2)}));
    out.push_back(make_case("(5)", "S_3 ⋊ {1,τ1}",
                            {fr(0), fr(1), fr(1), fr(1)}));
    out.push_back(make_case("(6)", "S_2 ⋊ {1,τ1}",
                            {fr(0), fr(1), fr(1), fr(3)}));
    out.push_back(make_case("(6')", "S_2 ⋊ S_3",
                            {fr(0), fr(1), fr(1), fr(2)}));
    out.push_back(make_case("(7)", "{1,τ1}",
                            {fr(0), fr(1), fr(2), fr(4)}));
    out.push_back(make_case("(7')", "S_3",
                            {fr(0), fr(1), fr(2), fr(3)}));
    out.push_back(make_case("(8)", "S_2",
                            {fr(1), fr(1), fr(2), fr(5)}));
    out.push_back(make_case("(9)", "S_3",
                            {fr(1), fr(1), fr(1), fr(4)}));
    out.push_back(make_case("(10)", "1",
                            {fr(1), fr(2), fr(4), fr(8)}));
  }
  return out;
}

void all_partitions_of(int n, std::vector<std::vector<int>>& out) {
  out = enumerate_partitions(n);
}

}  // namespace

std::vector<PaperStratum> paper_strata(GroupType t, ActionMode mode) {
  if (!rank_supported(t))
    throw std::invalid_argument("paper_strata: unsupported rank");
  if (t.family == Family::G2) return g2_strata(mode);
  if (t.family == Family::F4) return f4_strata(mode);

  std::vector<PaperStratum> out;
  const int n = t.rank;
  const std::size_t dim = t.family == Family::A ? n + 1 : n;
  std::vector<std::vector<int>> parts;

  if (t.family == Family::A) {
    all_partitions_of(n + 1, parts);
    for (auto& blocks : parts) {
      StratumDescriptor s;
      s.blocks = blocks;
      out.push_back(make_classical(t, mode, std::move(s), dim));
    }
    return out;
  }

  for (int n1 = 0; n1 <= n; ++n1) {
    all_partitions_of(n - n1, parts);
    std::vector<int> n1p_values;
    if (mode == ActionMode::linear) {
      n1p_values.push_back(n1);  // all special coordinates are zeros
    } else if (t.family == Family::B) {
      for (int k = 0; k <= n1; ++k) n1p_values.push_back(k);
    } else {  // C and D: classes symmetric in (zeros, halves)
      for (int k = 0; k <= n1 / 2; ++k) n1p_values.push_back(k);
    }
    for (int n1p : n1p_values)
      for (auto& blocks : parts) {
        StratumDescriptor s;
        s.blocks = blocks;
        s.n1 = n1;
        s.n1p = n1p;
        out.push_back(make_classical(t, mode, std::move(s), dim));
      }
  }

  if (t.family == Family::D && n % 2 == 0) {
    // Exotic strata: one per partition of n/2, blocks doubled, the first in
    // the (a,...,a,-a) shape.
    all_partitions_of(n / 2, parts);
    for (auto& ks : parts) {
      StratumDescriptor s;
      for (int k : ks) s.blocks.push_back(2 * k);
      s.exotic = true;
      out.push_back(make_classical(t, mode, std::move(s), dim));
    }
  }
  return out;
}

void attach_descriptors(ClassificationReport& report, const ActionSpace& space,
                        GroupType t, ActionMode mode) {
  std::vector<PaperStratum> strata = paper_strata(t, mode);
  std::vector<int> first_match(report.classes.size(), -1);
  for (std::size_t si = 0; si < strata.size(); ++si) {
    Subgroup stab = stabilizer(space, strata[si].witness);
    bool matched = false;
    for (std::size_t ci = 0; ci < report.classes.size(); ++ci) {
      if (!are_conjugate(report.classes[ci].representative, stab).conjugate)
        continue;
      matched = true;
      OrbitTypeClass& cls = report.classes[ci];
      if (cls.descriptor.empty()) {
        cls.descriptor = strata[si].rendered;
        first_match[ci] = static_cast<int>(si);
      } else {
        cls.descriptor += " ≡ " + strata[si].rendered;
        report.warnings.push_back(
            "paper strata overlap on one computed class: \"" +
            strata[first_match[ci]].rendered + "\" and \"" +
            strata[si].rendered + "\"");
      }
      break;  // a stratum realizes exactly one class
    }
    if (!matched)
      report.warnings.push_back("paper stratum not realized by any computed class: \"" +
                                strata[si].rendered + "\"");
  }
  for (OrbitTypeClass& cls : report.classes)
    if (cls.descriptor.empty()) cls.descriptor = "unlisted";
}

}  // namespace genus
