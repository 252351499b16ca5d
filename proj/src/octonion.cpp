#include "weylgenus/octonion.hpp"

#include <stdexcept>

namespace genus {

namespace {

// v_i * v_j as a signed 1-based index (0 = product vanishes); row = left factor.
constexpr int kTable[8][8] = {
    {1, 2, 3, 0, 5, 0, 0, 0},
    {0, 0, 4, 0, -6, 0, -1, 2},
    {0, -4, 0, 0, 7, -1, 0, 3},
    {4, 0, 0, 0, -8, -2, 3, 0},
    {0, 6, -7, -1, 0, 0, 0, 5},
    {6, 0, -8, 2, 0, 0, -5, 0},
    {7, -8, 0, -3, 0, 5, 0, 0},
    {0, 0, 0, 4, 0, 6, 7, 8},
};

}  // namespace

int multiplication_table(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8)
    throw std::out_of_range("multiplication_table: basis index");
  return kTable[i - 1][j - 1];
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Octonion operator*(const Frac& s, const Octonion& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
  return r;
}

Octonion multiply(const Octonion& x, const Octonion& y) {
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (y.c[j].is_zero()) continue;
      int t = kTable[i][j];
      if (t == 0) continue;
      Frac coeff = x.c[i] * y.c[j];
      if (t < 0) r.c[-t - 1] -= coeff;
      else r.c[t - 1] += coeff;
    }
  }
  return r;
}

Frac form(const Octonion& x, const Octonion& y) {
  Frac s;
  for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[7 - i];
  return s;
}

QMatrix t_ab(const Octonion& a, const Octonion& b) {
  QMatrix m(8);
  for (int j = 0; j < 8; ++j) {
    Octonion x = Octonion::basis(j + 1);
    Octonion img = (form(x, a) * b) - (form(x, b) * a);
    for (int i = 0; i < 8; ++i) m.at(i, j) = img.c[i];
  }
  return m;
}

// e1..e8 = v1, v2, v3, v4, v8, v7, v6, v5.
const std::array<int, 8> kBasisReorder = {1, 2, 3, 4, 8, 7, 6, 5};

QMatrix cartan_diagonal(const std::array<Frac, 4>& params) {
  QMatrix m(8);
  for (int k = 0; k < 8; ++k) {
    int v = kBasisReorder[k] - 1;
    m.at(v, v) = k < 4 ? params[k] : -params[k - 4];
  }
  return m;
}

TripleMaps triple_from_params(const std::array<Frac, 4>& params) {
  const Frac h(1, 2);
  const auto& a = params;
  std::array<Frac, 4> p2 = {h * (a[0] + a[1] + a[2] - a[3]),
                            h * (a[0] + a[1] - a[2] + a[3]),
                            h * (a[0] - a[1] + a[2] + a[3]),
                            h * (-a[0] + a[1] + a[2] + a[3])};
  std::array<Frac, 4> p3 = {h * (a[0] - a[1] - a[2] + a[3]),
                            h * (-a[0] + a[1] - a[2] + a[3]),
                            h * (-a[0] - a[1] + a[2] + a[3]),
                            h * (a[0] + a[1] + a[2] + a[3])};
  return TripleMaps{cartan_diagonal(params), cartan_diagonal(p2),
                    cartan_diagonal(p3)};
}

DerivationCheck check_derivation(const std::array<Frac, 4>& params) {
  TripleMaps t = triple_from_params(params);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Octonion x = Octonion::basis(i);
      Octonion y = Octonion::basis(j);
      Octonion xy = multiply(x, y);
      auto apply = [](const QMatrix& m, const Octonion& v) {
        Octonion out;
        for (int r = 0; r < 8; ++r) {
          Frac s;
          for (int c = 0; c < 8; ++c)
            if (!m.at(r, c).is_zero()) s += m.at(r, c) * v.c[c];
          out.c[r] = s;
        }
        return out;
      };
      Octonion lhs = apply(t.t1, xy);
      Octonion rhs = multiply(apply(t.t2, x), y) + multiply(x, apply(t.t3, y));
      if (!(lhs == rhs)) return DerivationCheck{false, i, j};
    }
  return DerivationCheck{true, 0, 0};
}

}  // namespace genus
