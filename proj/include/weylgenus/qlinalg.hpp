#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylgenus/fraction.hpp"

namespace genus {

// Fixed-dimension exact rational vector.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : c_(dim) {}
  QVector(std::initializer_list<Frac> init) : c_(init) {}
  explicit QVector(std::vector<Frac> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Frac& operator[](std::size_t i) const { return c_[i]; }
  Frac& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Frac>& coords() const { return c_; }

  friend QVector operator+(const QVector& a, const QVector& b);
  friend QVector operator-(const QVector& a, const QVector& b);
  friend QVector operator*(const Frac& s, const QVector& v);
  friend bool operator==(const QVector& a, const QVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }

  bool is_zero() const;
  Frac sum() const;
  std::string str() const;  // "(p/q, p/q, ...)"

 private:
  std::vector<Frac> c_;
};

// Dense square rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() : dim_(0) {}
  explicit QMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static QMatrix identity(std::size_t dim);
  static QMatrix from_rows(const std::vector<std::vector<Frac>>& rows);

  std::size_t dim() const { return dim_; }
  const Frac& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
  Frac& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& m, const QVector& v);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QMatrix transpose() const;
  QMatrix inverse() const;  // throws std::domain_error if singular
  std::size_t rank() const;
  bool is_identity() const;

  // Orthogonality w.r.t. the standard inner product: M^T M = I.
  bool is_orthogonal() const;

  // Canonical serialization (reduced fractions, row-major); used as hash key.
  std::string key() const;

 private:
  std::size_t dim_;
  std::vector<Frac> e_;
};

// Solves A x = b by Gaussian elimination. A is given as a list of columns
// (each of length rows); returns the unique solution when the columns are
// linearly independent and b lies in their span, std::nullopt when b is
// outside the span. Throws on dependent columns with an ambiguous solve.
std::optional<std::vector<Frac>> solve_columns(
    const std::vector<QVector>& columns, const QVector& b);

// Rank of a list of vectors.
std::size_t rank_of(const std::vector<QVector>& vectors);

// Dimension of { x : M_i x = x for all i } intersected with the optional
// constraint functional's kernel.
std::size_t fixed_space_dim(const std::vector<QMatrix>& mats,
                            const QVector* constraint_functional,
                            std::size_t dim);

}  // namespace genus
