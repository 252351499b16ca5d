#pragma once

#include <array>
#include <optional>

#include "weylgenus/qlinalg.hpp"

namespace genus {

// Split octonion algebra over Q in the basis v1..v8 of the explicit
// quaternion-pair model; multiplication is the bilinear extension of the
// 8x8 structure table.
struct Octonion {
  std::array<Frac, 8> c{};

  static Octonion basis(int i) {  // 1-based v_i
    Octonion o;
    o.c[i - 1] = Frac(1);
    return o;
  }
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Frac& s, const Octonion& a);
  friend bool operator==(const Octonion&, const Octonion&) = default;
};

Octonion multiply(const Octonion& x, const Octonion& y);

// Structure constants: table(i, j) returns the signed 1-based basis index of
// v_i * v_j, 0 when the product vanishes.
int multiplication_table(int i, int j);

// Bilinear form of the norm: 1s on the antidiagonal in the v-basis.
Frac form(const Octonion& x, const Octonion& y);

// t_{a,b}(x) = <x,a> b - <x,b> a, as an 8x8 matrix in the v-basis. Lies in
// so(N): skew-adjoint for the form.
QMatrix t_ab(const Octonion& a, const Octonion& b);

// Reordered basis e1..e8 of the Lie-algebra computation: e_i = v_{kBasisReorder[i]}
// (1-based). In the e-basis the form becomes [[0,I],[I,0]] and the Cartan
// subalgebra is diagonal.
extern const std::array<int, 8> kBasisReorder;

// Diagonal Cartan element diag(a1..a4, -a1..-a4) in the e-basis, expressed in
// the v-basis.
QMatrix cartan_diagonal(const std::array<Frac, 4>& params);

struct TripleMaps {
  QMatrix t1, t2, t3;  // 8x8, v-basis
};

// The related triple of a diagonal Cartan element: t2 and t3 carry the
// half-sum parameter combinations (the same matrices the F4 Weyl model uses).
TripleMaps triple_from_params(const std::array<Frac, 4>& params);

struct DerivationCheck {
  bool ok = true;
  int i = 0, j = 0;  // first failing basis pair when !ok (1-based)
};

// Tests t1(xy) = t2(x) y + x t3(y) on all 64 basis pairs.
DerivationCheck check_derivation(const std::array<Frac, 4>& params);

}  // namespace genus
