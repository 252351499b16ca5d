#include "weylgenus/orbits.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace genus {

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GENUS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void ActionSpace::validate() const {
  if (!group) throw std::invalid_argument("ActionSpace: missing group");
  if (mode == ActionMode::torus && !lattice)
    throw std::invalid_argument("ActionSpace: torus mode requires a lattice");
  if (lattice && lattice->ambient_dim() != dim())
    throw std::invalid_argument("ActionSpace: lattice dimension mismatch");
  if (constraint && constraint->dim() != dim())
    throw std::invalid_argument("ActionSpace: constraint dimension mismatch");
  for (ElementId gid : group->generator_ids()) {
    const QMatrix& w = group->element(gid);
    if (!w.is_orthogonal())
      throw std::invalid_argument("ActionSpace: generator not orthogonal");
    if (lattice)
      for (const QVector& g : lattice->generators())
        if (!lattice->contains(w * g))
          throw std::invalid_argument("ActionSpace: lattice not W-invariant");
    if (constraint) {
      // The kernel must be preserved: the pulled-back functional has to be a
      // scalar multiple of the original.
      QVector pulled = w.transpose() * *constraint;
      std::optional<Frac> scale;
      bool proportional = true;
      for (std::size_t i = 0; i < pulled.dim(); ++i) {
        const Frac& base = (*constraint)[i];
        if (base.is_zero()) {
          if (!pulled[i].is_zero()) proportional = false;
          continue;
        }
        Frac ratio = pulled[i] / base;
        if (!scale) scale = ratio;
        else if (!(*scale == ratio)) proportional = false;
      }
      if (!proportional || !scale || scale->is_zero())
        throw std::invalid_argument("ActionSpace: constraint not W-invariant");
    }
  }
}

Subgroup stabilizer(const ActionSpace& space, const QVector& point) {
  if (point.dim() != space.dim())
    throw std::invalid_argument("stabilizer: dimension mismatch");
  if (space.constraint) {
    Frac pairing;
    for (std::size_t i = 0; i < point.dim(); ++i)
      pairing += (*space.constraint)[i] * point[i];
    if (!pairing.is_zero())
      throw std::invalid_argument("stabilizer: point violates the constraint");
  }
  const WeylGroup& g = *space.group;
  std::vector<ElementId> ids;
  for (ElementId id = 0; id < static_cast<ElementId>(g.order()); ++id) {
    QVector moved = g.element(id) * point;
    bool fixes = space.mode == ActionMode::linear
                     ? moved == point
                     : space.lattice->contains(moved - point);
    if (fixes) ids.push_back(id);
  }
  return Subgroup::from_ids(g, std::move(ids));
}

std::size_t fixed_space_dimension(const ActionSpace& space, const Subgroup& h) {
  if (&h.parent() != space.group.get())
    throw std::invalid_argument("fixed_space_dimension: foreign subgroup");
  std::vector<QMatrix> mats;
  for (ElementId id : h.parent().minimal_generators(h.members()))
    mats.push_back(h.parent().element(id));
  const QVector* functional =
      space.constraint ? &*space.constraint : nullptr;
  return fixed_space_dim(mats, functional, space.dim());
}

namespace {

constexpr std::size_t kMaxDim = 8;
using Point = std::array<std::int64_t, kMaxDim>;

struct IntWeyl {
  std::size_t dim = 0;
  std::int64_t wden = 1;  // common denominator of all entries
  // mats[e] = wden * element(e), row-major.
  std::vector<std::array<std::int64_t, kMaxDim * kMaxDim>> mats;
};

IntWeyl scale_group(const WeylGroup& g) {
  IntWeyl iw;
  iw.dim = g.dim();
  std::int64_t den = 1;
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t i = 0; i < iw.dim; ++i)
      for (std::size_t j = 0; j < iw.dim; ++j)
        den = std::lcm(den, g.element(static_cast<ElementId>(e)).at(i, j).den());
  iw.wden = den;
  iw.mats.resize(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    iw.mats[e].fill(0);
    for (std::size_t i = 0; i < iw.dim; ++i)
      for (std::size_t j = 0; j < iw.dim; ++j) {
        Frac f = Frac(den) * g.element(static_cast<ElementId>(e)).at(i, j);
        iw.mats[e][i * kMaxDim + j] = f.num();
      }
  }
  return iw;
}

// One enumerated level of the grid scan.
struct LevelScan {
  const IntWeyl* weyl = nullptr;
  std::size_t dim = 0;
  int denominator = 0;
  bool torus = false;
  std::int64_t m = 1;  // grid step in scaled units (torus mode)
  hnf::ColumnHNF lat;  // scaled lattice (torus mode)
  const hnf::ColumnHNF* coarse = nullptr;  // optional jump probe
  bool hyperplane = false;
  std::size_t hyper_row = 0;  // coordinate determined by the zero-sum slice

  // Mixed-radix enumeration.
  std::vector<std::size_t> radix;
  std::vector<std::size_t> coord_of_digit;
  std::uint64_t total = 0;

  // Decodes candidate #index; returns false when the candidate is outside
  // the sliced box (linear hyperplane case only).
  bool decode(std::uint64_t index, Point& y) const {
    y.fill(0);
    for (std::size_t k = 0; k < radix.size(); ++k) {
      std::uint64_t digit = index % radix[k];
      index /= radix[k];
      std::int64_t v = static_cast<std::int64_t>(digit);
      if (torus) {
        y[coord_of_digit[k]] = v * m;
      } else {
        y[coord_of_digit[k]] = v - denominator;
      }
    }
    if (hyperplane) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < dim; ++i)
        if (i != hyper_row) s += y[i];
      y[hyper_row] = -s;
      if (!torus && std::llabs(y[hyper_row]) > denominator) return false;
    }
    return true;
  }

  void apply(std::size_t element, const Point& y, Point& out) const {
    const auto& mat = weyl->mats[element];
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc += mat[i * kMaxDim + j] * y[j];
      out[i] = acc;
    }
  }
};

enum class ImageFate { smaller_in_grid, equal, other };

// Allocation-free HNF reduction on the scan's point storage.
void reduce_in_place(const hnf::ColumnHNF& h, std::int64_t* b) {
  for (std::size_t k = 0; k < h.h.size(); ++k) {
    std::size_t p = h.pivot_row[k];
    std::int64_t d = h.h[k][p];
    std::int64_t q = b[p] / d;
    if (b[p] - q * d < 0) --q;
    if (q == 0) continue;
    const auto& col = h.h[k];
    for (std::size_t i = 0; i < col.size(); ++i) b[i] -= q * col[i];
  }
}

// Torus mode: image = w*y (already divided by wden), reduced mod lattice.
ImageFate torus_fate(const LevelScan& s, const Point& y, Point& img) {
  reduce_in_place(s.lat, img.data());
  for (std::size_t i = 0; i < s.dim; ++i)
    if (img[i] % s.m != 0) return ImageFate::other;  // not a grid coset
  for (std::size_t i = 0; i < s.dim; ++i) {
    if (img[i] < y[i]) return ImageFate::smaller_in_grid;
    if (img[i] > y[i]) return ImageFate::other;
  }
  return ImageFate::equal;
}

// Linear mode: compare w*y (scaled by wden) against wden*y; the image is in
// the candidate set iff it is wden-divisible and inside the box.
ImageFate linear_fate(const LevelScan& s, const Point& y, const Point& img) {
  const std::int64_t wden = s.weyl->wden;
  const std::int64_t bound = wden * s.denominator;
  bool in_set = true;
  for (std::size_t i = 0; i < s.dim; ++i)
    if (img[i] % wden != 0 || std::llabs(img[i]) > bound) {
      in_set = false;
      break;
    }
  int cmp = 0;
  for (std::size_t i = 0; i < s.dim; ++i) {
    std::int64_t rhs = wden * y[i];
    if (img[i] != rhs) {
      cmp = img[i] < rhs ? -1 : 1;
      break;
    }
  }
  if (cmp == 0) return ImageFate::equal;
  if (cmp < 0 && in_set) return ImageFate::smaller_in_grid;
  return ImageFate::other;
}

struct Found {
  Point point;
  std::vector<ElementId> stab;
  std::vector<ElementId> coarse_stab;  // only for the jump probe
};

// Scans candidates [begin, end); keeps canonical orbit representatives with
// their stabilizers.
void scan_range(const LevelScan& s, std::uint64_t begin, std::uint64_t end,
                std::vector<Found>& out) {
  const std::size_t order = s.weyl->mats.size();
  Point y, img;
  std::vector<ElementId> stab;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (!s.decode(idx, y)) continue;
    stab.clear();
    stab.push_back(0);
    bool canonical = true;
    for (std::size_t e = 1; e < order; ++e) {
      s.apply(e, y, img);
      ImageFate fate;
      if (s.torus) {
        for (std::size_t i = 0; i < s.dim; ++i) img[i] /= s.weyl->wden;
        fate = torus_fate(s, y, img);
      } else {
        fate = linear_fate(s, y, img);
      }
      if (fate == ImageFate::smaller_in_grid) {
        canonical = false;
        break;
      }
      if (fate == ImageFate::equal) stab.push_back(static_cast<ElementId>(e));
    }
    if (!canonical) continue;
    Found f;
    f.point = y;
    f.stab = stab;
    if (s.coarse) {
      // Fine stabilizer is always contained in the coarse one; membership of
      // the displacement in the coarse lattice decides the rest.
      f.coarse_stab.push_back(0);
      std::vector<std::int64_t> diff(s.dim);
      for (std::size_t e = 1; e < order; ++e) {
        s.apply(e, y, img);
        bool integral = true;
        for (std::size_t i = 0; i < s.dim; ++i) {
          if (img[i] % s.weyl->wden != 0) { integral = false; break; }
          diff[i] = img[i] / s.weyl->wden - y[i];
        }
        if (integral && hnf::solve_echelon(*s.coarse, diff))
          f.coarse_stab.push_back(static_cast<ElementId>(e));
      }
    }
    out.push_back(std::move(f));
  }
}

std::vector<Found> run_scan(const LevelScan& s, int threads) {
  std::vector<Found> all;
  if (s.total == 0) return all;
  const std::uint64_t chunk = 1 << 15;
  const std::uint64_t nchunks = (s.total + chunk - 1) / chunk;
  if (threads <= 1 || nchunks == 1) {
    scan_range(s, 0, s.total, all);
    return all;
  }
  std::vector<std::vector<Found>> per_chunk(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    while (true) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      std::uint64_t b = c * chunk;
      std::uint64_t e = std::min(s.total, b + chunk);
      scan_range(s, b, e, per_chunk[c]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  // Chunk-ordered merge keeps the result independent of scheduling.
  for (auto& c : per_chunk)
    for (auto& f : c) all.push_back(std::move(f));
  return all;
}

struct LevelPlan {
  LevelScan scan;
  std::int64_t scale = 1;  // torus: witness = y / scale; linear: y / D
};

LevelPlan plan_level(const ActionSpace& space, const IntWeyl& iw, int D,
                     const Lattice* fine, const hnf::ColumnHNF* coarse,
                     std::uint64_t max_points, std::int64_t extra_den = 1) {
  LevelPlan plan;
  LevelScan& s = plan.scan;
  s.weyl = &iw;
  s.dim = space.dim();
  s.denominator = D;
  s.torus = space.mode == ActionMode::torus;
  s.coarse = coarse;
  s.hyperplane = space.constraint.has_value();

  if (s.torus) {
    const Lattice& L = *fine;
    std::int64_t m = std::lcm(std::lcm(iw.wden, L.denominator()), extra_den);
    // Fundamental-domain enumeration needs lattice cosets representable on
    // the grid itself.
    for (const QVector& g : L.generators())
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (!(Frac(D) * g[i]).is_integer())
          throw std::invalid_argument(
              "classify: denominator schedule incompatible with lattice");
    s.m = m;
    plan.scale = static_cast<std::int64_t>(D) * m;
    // Scaled lattice columns: (D*m) * generators.
    std::vector<std::vector<std::int64_t>> cols;
    for (const QVector& g : L.generators()) {
      std::vector<std::int64_t> col(s.dim);
      for (std::size_t i = 0; i < s.dim; ++i)
        col[i] = (Frac(plan.scale) * g[i]).num();
      cols.push_back(std::move(col));
    }
    s.lat = hnf::column_hnf(cols, s.dim);
    std::vector<char> is_pivot(s.dim, 0);
    for (std::size_t k = 0; k < s.lat.h.size(); ++k) {
      std::size_t p = s.lat.pivot_row[k];
      is_pivot[p] = 1;
      std::int64_t diag = s.lat.h[k][p];
      if (diag % m != 0)
        throw std::logic_error("classify: scaled lattice not grid-aligned");
      s.radix.push_back(static_cast<std::size_t>(diag / m));
      s.coord_of_digit.push_back(p);
    }
    if (s.hyperplane) {
      std::size_t free_rows = 0;
      for (std::size_t i = 0; i < s.dim; ++i)
        if (!is_pivot[i]) {
          s.hyper_row = i;
          ++free_rows;
        }
      if (free_rows != 1)
        throw std::invalid_argument(
            "classify: hyperplane model needs corank-1 lattice");
    } else if (s.lat.h.size() != s.dim) {
      throw std::invalid_argument("classify: torus lattice must be full rank");
    }
  } else {
    std::size_t free_dims = s.dim - (s.hyperplane ? 1 : 0);
    if (s.hyperplane) s.hyper_row = s.dim - 1;
    for (std::size_t i = 0; i < free_dims; ++i) {
      s.radix.push_back(static_cast<std::size_t>(2 * D + 1));
      s.coord_of_digit.push_back(i);
    }
    plan.scale = D;
  }

  unsigned __int128 total = 1;
  for (std::size_t r : s.radix) {
    total *= r;
    if (total > max_points)
      throw ResourceError(
          "classify: grid too large; use a coarser denominator schedule or a "
          "lower rank");
  }
  s.total = static_cast<std::uint64_t>(total);
  return plan;
}

QVector point_to_qvector(const Point& p, std::size_t dim, std::int64_t scale) {
  QVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Frac(p[i], scale);
  return v;
}

std::uint64_t stab_key(const std::vector<ElementId>& ids) {
  std::uint64_t h = 1469598103934665603ull;
  for (ElementId id : ids) {
    h ^= static_cast<std::uint64_t>(id) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

void validate_schedule(const std::vector<int>& schedule) {
  if (schedule.empty())
    throw std::invalid_argument("classify: empty denominator schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0)
      throw std::invalid_argument("classify: denominators must be positive");
    if (i && schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("classify: denominators must increase");
    if (schedule.back() % schedule[i] != 0)
      throw std::invalid_argument(
          "classify: every denominator must divide the final one");
  }
}

}  // namespace

ClassificationReport classify(const ActionSpace& space,
                              const ClassifyOptions& opts) {
  space.validate();
  validate_schedule(opts.denominators);
  if (space.dim() > kMaxDim)
    throw std::invalid_argument("classify: dimension above engine limit");
  const WeylGroup& g = *space.group;
  const IntWeyl iw = scale_group(g);
  const int threads = resolve_thread_count(opts.threads);

  ClassificationReport report;
  report.group = space.group;
  report.denominators_used = opts.denominators;

  std::vector<std::vector<std::size_t>> level_presence;
  for (int D : opts.denominators) {
    LevelPlan plan = plan_level(space, iw, D,
                                space.lattice ? &*space.lattice : nullptr,
                                nullptr, opts.max_grid_points);
    std::vector<Found> found = run_scan(plan.scan, threads);

    // Exact-set interning first; conjugacy scans only on distinct sets.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> interned;
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < found.size(); ++i) {
      std::uint64_t key = stab_key(found[i].stab);
      auto& bucket = interned[key];
      bool fresh = true;
      for (std::size_t j : bucket)
        if (found[j].stab == found[i].stab) {
          fresh = false;
          break;
        }
      if (fresh) {
        bucket.push_back(i);
        distinct.push_back(i);
      }
    }

    std::vector<std::size_t> present;
    for (std::size_t i : distinct) {
      Subgroup sub = Subgroup::from_ids(g, found[i].stab);
      std::size_t match = report.classes.size();
      for (std::size_t c = 0; c < report.classes.size(); ++c)
        if (are_conjugate(report.classes[c].representative, sub).conjugate) {
          match = c;
          break;
        }
      if (match == report.classes.size()) {
        OrbitTypeClass cls{
            sub,
            fixed_space_dimension(space, sub),
            point_to_qvector(found[i].point, space.dim(), plan.scale),
            D,
            sub.order() == 1,
            ""};
        if (opts.check_reflection_closure &&
            !(reflection_closure(sub).members() == sub.members()))
          throw std::logic_error(
              "classify: isotropy subgroup not generated by its reflections "
              "(model violates the connectedness theory)");
        report.classes.push_back(std::move(cls));
      }
      if (std::find(present.begin(), present.end(), match) == present.end())
        present.push_back(match);
    }
    std::sort(present.begin(), present.end());
    level_presence.push_back(std::move(present));
  }

  const std::size_t n_levels = level_presence.size();
  report.stable = n_levels >= 2 &&
                  level_presence[n_levels - 1] == level_presence[n_levels - 2];

  if (opts.check_witnesses)
    for (const OrbitTypeClass& cls : report.classes)
      if (!(stabilizer(space, cls.witness).members() ==
            cls.representative.members()))
        throw std::logic_error(
            "classify: witness stabilizer mismatch between scan engine and "
            "exact path");

  std::sort(report.classes.begin(), report.classes.end(),
            [](const OrbitTypeClass& a, const OrbitTypeClass& b) {
              if (a.representative.order() != b.representative.order())
                return a.representative.order() > b.representative.order();
              auto da = a.fingerprint().digest_hex();
              auto db = b.fingerprint().digest_hex();
              if (da != db) return da < db;
              return a.witness.str() < b.witness.str();
            });
  return report;
}

LatticeComparison compare_lattices(const std::shared_ptr<const WeylGroup>& group,
                                   const Lattice& fine, const Lattice& coarse,
                                   const std::optional<QVector>& constraint,
                                   const ClassifyOptions& opts) {
  if (fine.ambient_dim() != coarse.ambient_dim() ||
      fine.ambient_dim() != group->dim())
    throw std::invalid_argument("compare_lattices: dimension mismatch");
  if (fine.rank() != coarse.rank())
    throw std::invalid_argument("compare_lattices: rank mismatch");
  for (const QVector& g : fine.generators())
    if (!coarse.contains(g))
      throw std::invalid_argument("compare_lattices: lattices not nested");
  ActionSpace fine_space{group, ActionMode::torus, fine, constraint};
  fine_space.validate();
  ActionSpace coarse_space{group, ActionMode::torus, coarse, constraint};
  coarse_space.validate();

  ClassifyOptions sub_opts = opts;
  sub_opts.check_reflection_closure = false;

  LatticeComparison out;
  out.denominators_used = sub_opts.denominators;
  out.fine_class_count = classify(fine_space, sub_opts).classes.size();
  out.coarse_class_count = classify(coarse_space, sub_opts).classes.size();

  const IntWeyl iw = scale_group(*group);
  const int threads = resolve_thread_count(sub_opts.threads);

  // Coarse membership needs the coarse lattice at the same scale as the
  // fine-grid scan; rebuild per level.
  std::map<std::pair<std::string, std::string>, JumpStratum> strata;
  std::vector<std::pair<std::string, std::string>> order_seen;
  for (int D : sub_opts.denominators) {
    std::int64_t m = std::lcm(std::lcm(iw.wden, fine.denominator()),
                              coarse.denominator());
    std::int64_t scale = static_cast<std::int64_t>(D) * m;
    std::vector<std::vector<std::int64_t>> ccols;
    for (const QVector& gvec : coarse.generators()) {
      std::vector<std::int64_t> col(coarse.ambient_dim());
      for (std::size_t i = 0; i < col.size(); ++i) {
        Frac f = Frac(scale) * gvec[i];
        if (!f.is_integer())
          throw std::logic_error("compare_lattices: scale failed");
        col[i] = f.num();
      }
      ccols.push_back(std::move(col));
    }
    hnf::ColumnHNF coarse_hnf = hnf::column_hnf(ccols, coarse.ambient_dim());

    LevelPlan plan = plan_level(fine_space, iw, D, &fine, &coarse_hnf,
                                sub_opts.max_grid_points, coarse.denominator());
    std::vector<Found> found = run_scan(plan.scan, threads);
    for (const Found& f : found) {
      if (f.coarse_stab.size() <= f.stab.size()) continue;
      Subgroup fs = Subgroup::from_ids_unchecked(*group, f.stab);
      Subgroup cs = Subgroup::from_ids_unchecked(*group, f.coarse_stab);
      auto key = std::make_pair(fs.fingerprint().digest_hex(),
                                cs.fingerprint().digest_hex());
      auto it = strata.find(key);
      if (it == strata.end()) {
        JumpStratum js;
        js.witness = point_to_qvector(f.point, fine.ambient_dim(), plan.scale);
        js.fine_order = fs.order();
        js.coarse_order = cs.order();
        js.points_seen = 1;
        js.fine_digest = key.first;
        js.coarse_digest = key.second;
        strata.emplace(key, std::move(js));
        order_seen.push_back(key);
      } else {
        it->second.points_seen++;
      }
    }
  }
  for (const auto& key : order_seen) out.jumps.push_back(strata.at(key));
  return out;
}

}  // namespace genus
