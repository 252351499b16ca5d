#include "weylgenus/qlinalg.hpp"

#include <stdexcept>

namespace genus {

QVector operator+(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QVector: dimension mismatch");
  QVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QVector: dimension mismatch");
  QVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator*(const Frac& s, const QVector& v) {
  QVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

bool QVector::is_zero() const {
  for (const Frac& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

Frac QVector::sum() const {
  Frac s;
  for (const Frac& f : c_) s += f;
  return s;
}

std::string QVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

QMatrix QMatrix::identity(std::size_t dim) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Frac(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Frac>>& rows) {
  QMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw std::invalid_argument("QMatrix: rows must form a square matrix");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QMatrix: dimension mismatch");
  const std::size_t n = a.dim();
  QMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Frac& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Frac& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.dim() != v.dim()) throw std::invalid_argument("QMatrix: dimension mismatch");
  const std::size_t n = m.dim();
  QVector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    Frac s;
    for (std::size_t j = 0; j < n; ++j) {
      const Frac& mij = m.at(i, j);
      if (!mij.is_zero()) s += mij * v[j];
    }
    r[i] = s;
  }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMatrix QMatrix::inverse() const {
  const std::size_t n = dim_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("QMatrix: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Frac p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Frac f = a.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Row echelon rank of a dense Frac matrix given as row vectors.
std::size_t echelon_rank(std::vector<std::vector<Frac>>& rows, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Frac p = rows[rank][col];
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      Frac f = rows[r][col];
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t QMatrix::rank() const {
  std::vector<std::vector<Frac>> rows(dim_, std::vector<Frac>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = at(i, j);
  return echelon_rank(rows, dim_);
}

bool QMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? Frac(1) : Frac(0))) return false;
  return true;
}

bool QMatrix::is_orthogonal() const {
  return (transpose() * *this).is_identity();
}

std::string QMatrix::key() const {
  std::string s;
  s.reserve(dim_ * dim_ * 8);
  for (const Frac& f : e_) {
    std::int64_t v[2] = {f.num(), f.den()};
    s.append(reinterpret_cast<const char*>(v), sizeof(v));
  }
  return s;
}

std::optional<std::vector<Frac>> solve_columns(
    const std::vector<QVector>& columns, const QVector& b) {
  const std::size_t rows = b.dim();
  const std::size_t cols = columns.size();
  for (const QVector& c : columns)
    if (c.dim() != rows) throw std::invalid_argument("solve_columns: dimension mismatch");

  // Augmented [A | b], eliminate to reduced echelon form.
  std::vector<std::vector<Frac>> m(rows, std::vector<Frac>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = columns[j][i];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Frac p = m[rank][col];
    for (std::size_t j = col; j <= cols; ++j) m[rank][j] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Frac f = m[r][col];
      if (f.is_zero()) continue;
      for (std::size_t j = col; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  if (rank < cols) throw std::invalid_argument("solve_columns: dependent columns");
  // Inconsistent rows mean b is outside the span.
  for (std::size_t r = rank; r < rows; ++r)
    if (!m[r][cols].is_zero()) return std::nullopt;
  std::vector<Frac> x(cols);
  for (std::size_t j = 0; j < cols; ++j) x[j] = m[pivot_of_col[j]][cols];
  return x;
}

std::size_t rank_of(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Frac>> rows;
  rows.reserve(vectors.size());
  for (const QVector& v : vectors) rows.push_back(v.coords());
  return echelon_rank(rows, vectors[0].dim());
}

std::size_t fixed_space_dim(const std::vector<QMatrix>& mats,
                            const QVector* constraint_functional,
                            std::size_t dim) {
  // Stack the rows of (M - I) for each matrix, plus the constraint row,
  // and return dim - rank.
  std::vector<std::vector<Frac>> rows;
  if (constraint_functional) rows.push_back(constraint_functional->coords());
  for (const QMatrix& m : mats) {
    if (m.dim() != dim) throw std::invalid_argument("fixed_space_dim: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Frac> row(dim);
      bool nonzero = false;
      for (std::size_t j = 0; j < dim; ++j) {
        row[j] = m.at(i, j) - (i == j ? Frac(1) : Frac(0));
        nonzero = nonzero || !row[j].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return dim;
  return dim - echelon_rank(rows, dim);
}

Frac Frac::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Frac(std::stoll(s));
  return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace genus
