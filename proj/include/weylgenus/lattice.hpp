#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weylgenus/qlinalg.hpp"

namespace genus {

namespace hnf {

// Column-style Hermite normal form of an integer matrix A (rows x cols,
// column-major storage: a[c][r]). Produces H = A * U with U unimodular,
// H in column echelon form: column k has its (positive) pivot in row
// pivot_row[k], zeros above it, and pivot rows are strictly increasing.
struct ColumnHNF {
  std::size_t rows = 0;
  std::vector<std::vector<std::int64_t>> h;  // h[k] = column k, length rows
  std::vector<std::vector<std::int64_t>> u;  // u[k] = column k of U, length cols(A)
  std::vector<std::size_t> pivot_row;        // one entry per column of h
};

ColumnHNF column_hnf(const std::vector<std::vector<std::int64_t>>& columns,
                     std::size_t rows);

// Solves H z = b exactly over the integers by forward substitution along the
// pivot rows; nullopt if no integral solution exists (including b outside
// the column span).
std::optional<std::vector<std::int64_t>> solve_echelon(
    const ColumnHNF& h, const std::vector<std::int64_t>& b);

// Canonical representative of b modulo the column span of H: subtracts
// integer multiples of the columns until every pivot coordinate lies in
// [0, pivot). Two vectors reduce to the same result iff they are congruent
// modulo the lattice spanned by H's columns.
std::vector<std::int64_t> reduce(const ColumnHNF& h,
                                 std::vector<std::int64_t> b);

}  // namespace hnf

// Full- or partial-rank rational lattice given by independent generators.
// Membership and integral coordinates go through a Hermite-normal-form solve
// of the generator matrix scaled to integers; the HNF is computed once.
class Lattice {
 public:
  static Lattice from_generators(std::vector<QVector> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<QVector>& generators() const { return generators_; }

  // True iff v is an integer combination of the generators. Vectors outside
  // the rational span return false.
  bool contains(const QVector& v) const;

  // Integer coefficients of v in terms of the generators, if any.
  std::optional<std::vector<std::int64_t>> integral_coords(const QVector& v) const;

  // Rational coefficients of v in terms of the generators; nullopt when v is
  // outside the rational span.
  std::optional<std::vector<Frac>> rational_coords(const QVector& v) const;

  // Unique representative of v + L in the half-open fundamental
  // parallelepiped { sum c_i g_i : 0 <= c_i < 1 }. Throws std::domain_error
  // when v is outside the rational span of the generators.
  QVector canonical_rep(const QVector& v) const;

  // Common denominator of all generator entries.
  std::int64_t denominator() const { return den_; }

  // Integer generator columns after scaling by denominator().
  const std::vector<std::vector<std::int64_t>>& scaled_columns() const {
    return int_cols_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<QVector> generators_;
  std::int64_t den_ = 1;  // scale clearing all generator denominators
  std::vector<std::vector<std::int64_t>> int_cols_;
  hnf::ColumnHNF hnf_;
};

// Convenience used by the spec examples and tests: exact integer coefficient
// solve for v against an independent generator list (one HNF solve).
std::optional<std::vector<std::int64_t>> solve_integral(
    const std::vector<QVector>& generators, const QVector& v);

}  // namespace genus
