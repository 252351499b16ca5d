#include "weylgenus/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace genus {
namespace hnf {

namespace {

void check_i64(__int128 v, const char* what) {
  if (v < INT64_MIN || v > INT64_MAX)
    throw std::overflow_error(std::string("hnf: 64-bit overflow in ") + what);
}

// col_a += q * col_b, checked.
void add_multiple(std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b, std::int64_t q) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    __int128 v = static_cast<__int128>(a[i]) + static_cast<__int128>(q) * b[i];
    check_i64(v, "column update");
    a[i] = static_cast<std::int64_t>(v);
  }
}

}  // namespace

ColumnHNF column_hnf(const std::vector<std::vector<std::int64_t>>& columns,
                     std::size_t rows) {
  ColumnHNF out;
  out.rows = rows;
  const std::size_t ncols = columns.size();
  std::vector<std::vector<std::int64_t>> h = columns;
  std::vector<std::vector<std::int64_t>> u(ncols,
                                           std::vector<std::int64_t>(ncols, 0));
  for (std::size_t k = 0; k < ncols; ++k) u[k][k] = 1;

  std::size_t k = 0;  // next column to fix
  for (std::size_t r = 0; r < rows && k < ncols; ++r) {
    // Euclidean elimination across columns k..end on row r.
    while (true) {
      std::size_t nonzero = ncols;
      for (std::size_t c = k; c < ncols; ++c)
        if (h[c][r] != 0 &&
            (nonzero == ncols ||
             std::llabs(h[c][r]) < std::llabs(h[nonzero][r])))
          nonzero = c;
      if (nonzero == ncols) break;  // row r clear beyond k
      std::swap(h[k], h[nonzero]);
      std::swap(u[k], u[nonzero]);
      if (h[k][r] < 0) {
        for (auto& x : h[k]) x = -x;
        for (auto& x : u[k]) x = -x;
      }
      bool reduced = true;
      for (std::size_t c = k + 1; c < ncols; ++c) {
        if (h[c][r] == 0) continue;
        std::int64_t q = h[c][r] / h[k][r];
        add_multiple(h[c], h[k], -q);
        add_multiple(u[c], u[k], -q);
        if (h[c][r] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h[k][r] != 0) {
      // Normalize entries of earlier columns in this pivot row to [0, pivot).
      for (std::size_t c = 0; c < k; ++c) {
        std::int64_t q = h[c][r] / h[k][r];
        if (h[c][r] - q * h[k][r] < 0) --q;
        if (q != 0) {
          add_multiple(h[c], h[k], -q);
          add_multiple(u[c], u[k], -q);
        }
      }
      out.pivot_row.push_back(r);
      ++k;
    }
  }
  h.resize(k);
  u.resize(k);
  // Note: columns of U beyond rank were dropped; for independent input
  // generators rank == ncols and U stays square unimodular.
  out.h = std::move(h);
  out.u = std::move(u);
  return out;
}

std::optional<std::vector<std::int64_t>> solve_echelon(
    const ColumnHNF& h, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r = b;
  std::vector<std::int64_t> z(h.h.size(), 0);
  for (std::size_t k = 0; k < h.h.size(); ++k) {
    std::size_t p = h.pivot_row[k];
    std::int64_t d = h.h[k][p];
    if (r[p] % d != 0) return std::nullopt;
    std::int64_t q = r[p] / d;
    z[k] = q;
    if (q != 0) add_multiple(r, h.h[k], -q);
  }
  for (std::int64_t v : r)
    if (v != 0) return std::nullopt;
  return z;
}

std::vector<std::int64_t> reduce(const ColumnHNF& h,
                                 std::vector<std::int64_t> b) {
  for (std::size_t k = 0; k < h.h.size(); ++k) {
    std::size_t p = h.pivot_row[k];
    std::int64_t d = h.h[k][p];
    std::int64_t q = b[p] / d;
    if (b[p] - q * d < 0) --q;
    if (q != 0) add_multiple(b, h.h[k], -q);
  }
  return b;
}

}  // namespace hnf

Lattice Lattice::from_generators(std::vector<QVector> generators) {
  if (generators.empty())
    throw std::invalid_argument("Lattice: no generators");
  Lattice lat;
  lat.ambient_dim_ = generators[0].dim();
  for (const QVector& g : generators)
    if (g.dim() != lat.ambient_dim_)
      throw std::invalid_argument("Lattice: dimension mismatch");
  if (rank_of(generators) != generators.size())
    throw std::invalid_argument("Lattice: dependent generators");
  lat.generators_ = std::move(generators);

  std::int64_t den = 1;
  for (const QVector& g : lat.generators_)
    for (std::size_t i = 0; i < g.dim(); ++i)
      den = std::lcm(den, g[i].den());
  lat.den_ = den;
  for (const QVector& g : lat.generators_) {
    std::vector<std::int64_t> col(lat.ambient_dim_);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Frac scaled = Frac(den) * g[i];
      col[i] = scaled.num();
    }
    lat.int_cols_.push_back(std::move(col));
  }
  lat.hnf_ = hnf::column_hnf(lat.int_cols_, lat.ambient_dim_);
  return lat;
}

namespace {

// Scales v by s (clearing denominators); nullopt if s*v is not integral.
std::optional<std::vector<std::int64_t>> scale_to_int(const QVector& v,
                                                      std::int64_t s) {
  std::vector<std::int64_t> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Frac f = Frac(s) * v[i];
    if (!f.is_integer()) return std::nullopt;
    out[i] = f.num();
  }
  return out;
}

}  // namespace

bool Lattice::contains(const QVector& v) const {
  return integral_coords(v).has_value();
}

std::optional<std::vector<std::int64_t>> Lattice::integral_coords(
    const QVector& v) const {
  if (v.dim() != ambient_dim_)
    throw std::invalid_argument("Lattice: dimension mismatch");
  // v = sum c_i g_i with c integral  <=>  den*v = sum c_i (den*g_i) and the
  // scaled right-hand side must itself be integral.
  auto b = scale_to_int(v, den_);
  if (!b) return std::nullopt;
  auto z = hnf::solve_echelon(hnf_, *b);
  if (!z) return std::nullopt;
  // c = U z.
  std::vector<std::int64_t> c(generators_.size(), 0);
  for (std::size_t k = 0; k < z->size(); ++k)
    for (std::size_t i = 0; i < c.size(); ++i) {
      __int128 acc = static_cast<__int128>(c[i]) +
                     static_cast<__int128>(hnf_.u[k][i]) * (*z)[k];
      if (acc < INT64_MIN || acc > INT64_MAX)
        throw std::overflow_error("Lattice: coefficient overflow");
      c[i] = static_cast<std::int64_t>(acc);
    }
  return c;
}

std::optional<std::vector<Frac>> Lattice::rational_coords(const QVector& v) const {
  if (v.dim() != ambient_dim_)
    throw std::invalid_argument("Lattice: dimension mismatch");
  return solve_columns(generators_, v);
}

QVector Lattice::canonical_rep(const QVector& v) const {
  auto coords = rational_coords(v);
  if (!coords)
    throw std::domain_error("Lattice: vector outside rational span");
  QVector rep = v;
  for (std::size_t i = 0; i < coords->size(); ++i) {
    std::int64_t q = (*coords)[i].floor();
    if (q != 0) rep = rep - (Frac(q) * generators_[i]);
  }
  return rep;
}

std::optional<std::vector<std::int64_t>> solve_integral(
    const std::vector<QVector>& generators, const QVector& v) {
  return Lattice::from_generators(generators).integral_coords(v);
}

}  // namespace genus
