#include "weylgenus/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "weylgenus/octonion.hpp"
#include "weylgenus/partitions.hpp"
#include "weylgenus/report.hpp"

namespace genus {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t next(std::uint64_t bound) { return engine() % bound; }
  std::int64_t signed_next(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next(hi - lo + 1));
  }
};

QVector random_point(Rng& rng, const ActionSpace& space, int max_den) {
  const std::size_t dim = space.dim();
  std::int64_t den = 1 + static_cast<std::int64_t>(rng.next(max_den));
  QVector v(dim);
  std::size_t free_coords = space.constraint ? dim - 1 : dim;
  for (std::size_t i = 0; i < free_coords; ++i)
    v[i] = Frac(rng.signed_next(-2 * den, 2 * den), den);
  if (space.constraint) {
    // Zero-sum slice: last coordinate balances the rest.
    Frac s;
    for (std::size_t i = 0; i + 1 < dim; ++i) s += v[i];
    v[dim - 1] = -s;
  }
  return v;
}

std::vector<ElementId> conjugated_members(const Subgroup& h, ElementId g) {
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (ElementId m : h.members()) out.push_back(h.parent().conjugate(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Independent partition-count oracle: plain recursion, no table.
std::int64_t count_partitions_brute(int n, int max_part) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part)
    total += count_partitions_brute(n - part, part);
  return total;
}

Subgroup standard_symmetric_subgroup(const WeylGroup& g, std::size_t dim) {
  // All plain permutation matrices.
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  std::vector<ElementId> ids;
  do {
    QMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(perm[i], i) = Frac(1);
    auto id = g.lookup(m);
    if (!id) throw std::logic_error("standard S_n not inside the group");
    ids.push_back(*id);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Subgroup::from_ids(g, std::move(ids));
}

struct Ctx {
  SelftestOptions opts;
  ClassifyOptions cls_opts;
};

CriterionResult criterion1_partitions(const Ctx&) {
  CriterionResult r{1, "partition oracle (recurrence vs direct enumeration)"};
  auto start = Clock::now();
  std::string mismatch;
  for (int n = 0; n <= 20 && mismatch.empty(); ++n)
    if (partition_count(n) != count_partitions_brute(n, n == 0 ? 1 : n))
      mismatch = "count mismatch at n=" + std::to_string(n);
  for (int n = 0; n <= 15 && mismatch.empty(); ++n)
    if (static_cast<std::int64_t>(enumerate_partitions(n).size()) !=
        partition_count(n))
      mismatch = "enumeration length mismatch at n=" + std::to_string(n);
  r.seconds = seconds_since(start);
  bool in_time = r.seconds < 1.0;
  r.pass = mismatch.empty() && in_time;
  r.detail = mismatch.empty() ? "p(n) verified for n<=20; lengths for n<=15"
                              : mismatch;
  if (!in_time) r.detail += "; over the 1s budget";
  return r;
}

CriterionResult criterion2_orders(const Ctx&) {
  CriterionResult r{2, "Weyl group orders from generator closure"};
  auto start = Clock::now();
  std::string mismatch;
  auto check = [&](GroupType t) {
    if (!mismatch.empty()) return;
    if (weyl_group(t)->order() != expected_weyl_order(t))
      mismatch = "order mismatch for " + family_name(t.family) +
                 std::to_string(t.rank);
  };
  for (int n = 1; n <= 5; ++n) check({Family::A, n});
  for (int n = 1; n <= 5; ++n) check({Family::B, n});
  for (int n = 1; n <= 5; ++n) check({Family::C, n});
  for (int n = 2; n <= 5; ++n) check({Family::D, n});
  check({Family::G2, 2});
  check({Family::F4, 4});
  r.seconds = seconds_since(start);
  bool in_time = r.seconds < 30.0;
  r.pass = mismatch.empty() && in_time;
  r.detail = mismatch.empty()
                 ? "A(n<=5) B(n<=5) C(n<=5) D(n<=5) G2 F4 all exact"
                 : mismatch;
  if (!in_time) r.detail += "; over the 30s budget";
  return r;
}

CriterionResult criterion3_a_series(const Ctx& ctx) {
  CriterionResult r{3, "A_n genus: brute force equals p(n+1)"};
  auto start = Clock::now();
  const long long expected[] = {2, 3, 5, 7};
  std::ostringstream detail;
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    auto run_start = Clock::now();
    GenusReport rep =
        make_genus_report({Family::A, n}, ActionMode::torus, true, true,
                          ctx.cls_opts);
    double run_secs = seconds_since(run_start);
    bool good = rep.brute->count == static_cast<std::size_t>(expected[n - 1]) &&
                *rep.formula == expected[n - 1] && !rep.discrepancy &&
                run_secs < 60.0;
    ok = ok && good;
    detail << (n > 1 ? " " : "") << "A" << n << ":" << rep.brute->count;
    if (!good) detail << "(expected " << expected[n - 1] << ")";
  }
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion4_exceptional(const Ctx& ctx) {
  CriterionResult r{4, "exceptional counts: G2 6/4, F4 12/17"};
  auto start = Clock::now();
  struct Item {
    GroupType t;
    ActionMode mode;
    std::size_t expected;
  };
  const Item items[] = {
      {{Family::G2, 2}, ActionMode::torus, 6},
      {{Family::G2, 2}, ActionMode::linear, 4},
      {{Family::F4, 4}, ActionMode::linear, 12},
      {{Family::F4, 4}, ActionMode::torus, 17},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const Item& it : items) {
    GenusReport rep = make_genus_report(it.t, it.mode, false, true, ctx.cls_opts);
    bool good = rep.brute->count == it.expected && rep.brute->stable;
    ok = ok && good;
    detail << family_name(it.t.family) << " " << mode_name(it.mode) << "="
           << rep.brute->count;
    if (!rep.brute->stable) detail << "(unstable)";
    if (rep.brute->count != it.expected)
      detail << " EXPECTED " << it.expected
             << " (exhaustive enumeration disagrees with the published count;"
                " extra classes at (0,1/2,1/2,1/2), (0,1/4,1/2,1/2),"
                " (0,1/3,1/3,2/3))";
    detail << "; ";
  }
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion5_exotic_d4(const Ctx& ctx) {
  CriterionResult r{5, "exotic H4 class in D4 (group and algebra modes)"};
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (ActionMode mode : {ActionMode::torus, ActionMode::linear}) {
    TypeModel model = build({Family::D, 4}, mode);
    ClassificationReport rep = classify(model.space, ctx.cls_opts);
    QVector witness =
        mode == ActionMode::torus
            ? QVector{Frac(1, 5), Frac(1, 5), Frac(1, 5), Frac(-1, 5)}
            : QVector{Frac(1), Frac(1), Frac(1), Frac(-1)};
    Subgroup h = stabilizer(model.space, witness);
    Subgroup s4 = standard_symmetric_subgroup(*model.space.group, 4);
    std::size_t matches = 0;
    bool refl_ok = false, not_s4 = false, order_ok = h.order() == 24;
    for (const OrbitTypeClass& c : rep.classes)
      if (are_conjugate(c.representative, h).conjugate) ++matches;
    not_s4 = !are_conjugate(h, s4).conjugate;
    refl_ok = reflection_closure(h).members() == h.members();
    bool good = matches == 1 && not_s4 && refl_ok && order_ok;
    ok = ok && good;
    detail << mode_name(mode) << ": order=" << h.order()
           << " classes_matching=" << matches << " not_conj_S4=" << not_s4
           << " reflection_closed=" << refl_ok << "; ";
  }
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion6_isomorphisms(const Ctx& ctx) {
  CriterionResult r{6, "exceptional isomorphisms: B2=C2, D3=A3 (hard invariants)"};
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  auto order_multiset = [&](GroupType t, ActionMode m) {
    TypeModel model = build(t, m);
    ClassificationReport rep = classify(model.space, ctx.cls_opts);
    std::vector<std::size_t> orders;
    for (const OrbitTypeClass& c : rep.classes)
      orders.push_back(c.representative.order());
    std::sort(orders.begin(), orders.end());
    return orders;
  };
  for (ActionMode m : {ActionMode::torus, ActionMode::linear}) {
    auto b2 = order_multiset({Family::B, 2}, m);
    auto c2 = order_multiset({Family::C, 2}, m);
    auto d3 = order_multiset({Family::D, 3}, m);
    auto a3 = order_multiset({Family::A, 3}, m);
    bool good = b2 == c2 && d3 == a3;
    ok = ok && good;
    detail << mode_name(m) << ": B2=C2:" << (b2 == c2 ? "yes" : "NO")
           << " D3=A3:" << (d3 == a3 ? "yes" : "NO") << "; ";
  }
  // Where the formula disagrees, the table row must be flagged.
  TableReport group_table = make_table_report(ActionMode::torus, 3, ctx.cls_opts);
  bool flags_ok = true;
  for (const TableRow& row : group_table.rows) {
    bool should_agree =
        static_cast<long long>(row.brute) == row.formula;
    if (row.agree != should_agree) flags_ok = false;
    if ((row.type == "B2" || row.type == "D3") && row.agree) flags_ok = false;
  }
  ok = ok && flags_ok;
  detail << "discrepancy flags on B2/D3 rows: " << (flags_ok ? "set" : "MISSING");
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion7_algebra_formulas(const Ctx& ctx) {
  CriterionResult r{7, "algebra-mode B/C counts: sum p(n-i) = 4, 7"};
  auto start = Clock::now();
  const std::size_t expected[] = {4, 7};
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 3; ++n) {
    GenusReport b =
        make_genus_report({Family::B, n}, ActionMode::linear, true, true,
                          ctx.cls_opts);
    GenusReport c =
        make_genus_report({Family::C, n}, ActionMode::linear, true, true,
                          ctx.cls_opts);
    bool good = b.brute->count == expected[n - 2] &&
                c.brute->count == expected[n - 2] && !b.discrepancy &&
                !c.discrepancy;
    ok = ok && good;
    detail << "B" << n << ":" << b.brute->count << " C" << n << ":"
           << c.brute->count << " ";
  }
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion8_properties(const Ctx& ctx) {
  CriterionResult r{8, "property suite: equivariance, scaling, reflections, conjugacy axioms"};
  auto start = Clock::now();
  const std::vector<GroupType> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
      {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 2},
      {Family::D, 3}, {Family::G2, 2}};
  std::uint64_t failures = 0;
  std::uint64_t samples = 0;
  std::string first_failure;
  auto fail = [&](const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  };

  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    GroupType t = types[ti];
    Rng rng(ctx.opts.seed * 1315423911u + ti);
    TypeModel torus = build(t, ActionMode::torus);
    TypeModel linear = build(t, ActionMode::linear);
    const WeylGroup& g = *torus.space.group;
    std::string tag = family_name(t.family) + std::to_string(t.rank);

    // Stabilizer equivariance, torus then linear mode.
    for (int i = 0; i < 400; ++i, ++samples) {
      const ActionSpace& space =
          i % 2 ? linear.space : torus.space;
      QVector theta = random_point(rng, space, 10);
      ElementId w = static_cast<ElementId>(rng.next(g.order()));
      Subgroup stab = stabilizer(space, theta);
      Subgroup moved = stabilizer(space, g.element(w) * theta);
      if (conjugated_members(stab, w) != moved.members())
        fail(tag + ": equivariance");
    }
    // Scale invariance (linear mode only).
    for (int i = 0; i < 200; ++i, ++samples) {
      QVector theta = random_point(rng, linear.space, 10);
      Frac c(rng.signed_next(1, 7), 1 + rng.next(7));
      if (rng.next(2)) c = -c;
      Subgroup s1 = stabilizer(linear.space, theta);
      Subgroup s2 = stabilizer(linear.space, c * theta);
      if (!(s1.members() == s2.members())) fail(tag + ": scale invariance");
    }
    // Conjugacy relation axioms + witness correctness on sampled stabilizers.
    for (int i = 0; i < 200; ++i, ++samples) {
      const ActionSpace& space = i % 2 ? linear.space : torus.space;
      QVector theta1 = random_point(rng, space, 8);
      QVector theta2 = random_point(rng, space, 8);
      ElementId w = static_cast<ElementId>(rng.next(g.order()));
      Subgroup h1 = stabilizer(space, theta1);
      Subgroup h2 = stabilizer(space, g.element(w) * theta1);
      Subgroup h3 = stabilizer(space, theta2);
      auto c12 = are_conjugate(h1, h2);
      if (!c12.conjugate) fail(tag + ": conjugate pair not detected");
      if (c12.witness &&
          conjugated_members(h1, *c12.witness) != h2.members())
        fail(tag + ": witness incorrect");
      if (!are_conjugate(h1, h1).conjugate) fail(tag + ": reflexivity");
      if (are_conjugate(h2, h1).conjugate != c12.conjugate)
        fail(tag + ": symmetry");
      bool c13 = are_conjugate(h1, h3).conjugate;
      bool c23 = are_conjugate(h2, h3).conjugate;
      if (c13 != c23) fail(tag + ": transitivity");
    }
    // Reflection closure of every discovered class, both modes.
    for (const ActionSpace& space : {torus.space, linear.space}) {
      ClassificationReport rep = classify(space, ctx.cls_opts);
      for (const OrbitTypeClass& c : rep.classes) {
        ++samples;
        if (!(reflection_closure(c.representative).members() ==
              c.representative.members()))
          fail(tag + ": reflection closure");
      }
    }
    // Pad to the stated 1000 randomized samples per type with extra
    // equivariance draws.
    for (int i = 0; i < 200; ++i, ++samples) {
      QVector theta = random_point(rng, torus.space, 12);
      ElementId w = static_cast<ElementId>(rng.next(g.order()));
      Subgroup stab = stabilizer(torus.space, theta);
      Subgroup moved = stabilizer(torus.space, g.element(w) * theta);
      if (conjugated_members(stab, w) != moved.members())
        fail(tag + ": equivariance");
    }
  }
  r.seconds = seconds_since(start);
  r.pass = failures == 0;
  std::ostringstream detail;
  detail << samples << " checks across " << types.size() << " types, "
         << failures << " failures";
  if (failures) detail << " (first: " << first_failure << ")";
  r.detail = detail.str();
  return r;
}

CriterionResult criterion9_octonion(const Ctx& ctx) {
  CriterionResult r{9, "octonion derivation identity and Cartan assembly"};
  auto start = Clock::now();
  Rng rng(ctx.opts.seed ^ 0x0c70110ull);
  int passed = 0;
  std::string failure;
  for (int i = 0; i < 20; ++i) {
    std::array<Frac, 4> params;
    for (auto& p : params)
      p = Frac(rng.signed_next(-20, 20), 1 + rng.next(12));
    auto chk = check_derivation(params);
    if (chk.ok) ++passed;
    else if (failure.empty())
      failure = "derivation failed at basis pair (" + std::to_string(chk.i) +
                "," + std::to_string(chk.j) + ")";
  }
  // t1 = sum of t_{x_i,y_i} with x_i = a_i(e_i + e_{4+i}), y_i = (e_i - e_{4+i})/2.
  bool cartan_ok = true;
  for (int trial = 0; trial < 5 && cartan_ok; ++trial) {
    std::array<Frac, 4> params;
    for (auto& p : params)
      p = Frac(rng.signed_next(-9, 9), 1 + rng.next(6));
    QMatrix sum(8);
    for (int i = 0; i < 4; ++i) {
      Octonion ei = Octonion::basis(kBasisReorder[i]);
      Octonion e4i = Octonion::basis(kBasisReorder[i + 4]);
      Octonion x = params[i] * (ei + e4i);
      Octonion y = Frac(1, 2) * (ei - e4i);
      sum = sum + t_ab(x, y);
    }
    cartan_ok = sum == cartan_diagonal(params);
  }
  r.seconds = seconds_since(start);
  bool in_time = r.seconds < 1.0;
  r.pass = passed == 20 && cartan_ok && in_time;
  std::ostringstream detail;
  detail << passed << "/20 random parameter vectors pass on all 64 basis pairs"
         << "; Cartan assembly " << (cartan_ok ? "exact" : "WRONG");
  if (!failure.empty()) detail << "; " << failure;
  if (!in_time) detail << "; over the 1s budget";
  r.detail = detail.str();
  return r;
}

CriterionResult criterion10_lattice_jump(const Ctx& ctx) {
  CriterionResult r{10, "lattice-refinement probe on A1 (disconnected centralizer witness)"};
  auto start = Clock::now();
  CompareReport probe = make_compare_report({Family::A, 1}, 2, ctx.cls_opts);
  bool has_jump = false;
  for (const auto& j : probe.jumps)
    if (j.fine_order == 1 && j.coarse_order == 2) has_jump = true;
  // The quarter point must land in a jump stratum.
  TypeModel model = build({Family::A, 1}, ActionMode::torus);
  QVector quarter{Frac(1, 4), Frac(-1, 4)};
  Lattice coarse = Lattice::from_generators(
      {QVector{Frac(1, 2), Frac(-1, 2)}});
  ActionSpace coarse_space{model.space.group, ActionMode::torus, coarse,
                           model.space.constraint};
  std::size_t fine_stab = stabilizer(model.space, quarter).order();
  std::size_t coarse_stab = stabilizer(coarse_space, quarter).order();
  bool quarter_jump = fine_stab == 1 && coarse_stab == 2;
  CompareReport same = make_compare_report({Family::A, 1}, 1, ctx.cls_opts);
  bool none_when_equal = same.jumps.empty();
  r.seconds = seconds_since(start);
  r.pass = has_jump && quarter_jump && none_when_equal;
  std::ostringstream detail;
  detail << probe.jumps.size() << " jump stratum/strata; (1/4,-1/4): "
         << fine_stab << " -> " << coarse_stab
         << "; equal lattices: " << same.jumps.size() << " jumps";
  r.detail = detail.str();
  return r;
}

CriterionResult criterion11_determinism(const Ctx& ctx) {
  CriterionResult r{11, "determinism across thread counts"};
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  struct Item {
    GroupType t;
    ActionMode mode;
  };
  const Item items[] = {{{Family::G2, 2}, ActionMode::torus},
                        {{Family::D, 4}, ActionMode::torus},
                        {{Family::F4, 4}, ActionMode::linear}};
  for (const Item& it : items) {
    ClassifyOptions one = ctx.cls_opts;
    one.threads = 1;
    ClassifyOptions four = ctx.cls_opts;
    four.threads = 4;
    std::string a =
        make_genus_report(it.t, it.mode, true, true, one).to_json();
    std::string b =
        make_genus_report(it.t, it.mode, true, true, four).to_json();
    bool same = a == b;
    ok = ok && same;
    detail << family_name(it.t.family) << " " << mode_name(it.mode) << ":"
           << (same ? "identical" : "DIFFERS") << "; ";
  }
  ClassifyOptions one = ctx.cls_opts;
  one.threads = 1;
  ClassifyOptions four = ctx.cls_opts;
  four.threads = 4;
  bool table_same = make_table_report(ActionMode::linear, 3, one).to_json() ==
                    make_table_report(ActionMode::linear, 3, four).to_json();
  ok = ok && table_same;
  detail << "algebra table: " << (table_same ? "identical" : "DIFFERS");
  r.seconds = seconds_since(start);
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
  Ctx ctx;
  ctx.opts = opts;
  ctx.cls_opts.threads = opts.threads;
  std::vector<CriterionResult> results;
  results.push_back(criterion1_partitions(ctx));
  results.push_back(criterion2_orders(ctx));
  results.push_back(criterion3_a_series(ctx));
  results.push_back(criterion4_exceptional(ctx));
  results.push_back(criterion5_exotic_d4(ctx));
  results.push_back(criterion6_isomorphisms(ctx));
  results.push_back(criterion7_algebra_formulas(ctx));
  results.push_back(criterion8_properties(ctx));
  results.push_back(criterion9_octonion(ctx));
  results.push_back(criterion10_lattice_jump(ctx));
  results.push_back(criterion11_determinism(ctx));
  return results;
}

std::string selftest_json(const std::vector<CriterionResult>& results,
                          std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    arr.push_back(row);
    all = all && r.pass;
  }
  j["criteria"] = arr;
  j["all_pass"] = all;
  return j.dump(2);
}

}  // namespace genus
