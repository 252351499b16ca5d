#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylgenus/catalog.hpp"
#include "weylgenus/lattice.hpp"

using namespace genus;

namespace {

QVector qv(std::vector<Frac> v) { return QVector(std::move(v)); }

Frac random_frac(std::mt19937_64& rng) {
  auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % (hi - lo + 1));
  };
  return Frac(draw(-40, 40), draw(1, 12));
}

}  // namespace

TEST_CASE("Frac arithmetic is exact") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    Frac a = random_frac(rng), b = random_frac(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == Frac(0));
  }
  CHECK(Frac(6, -4) == Frac(-3, 2));
  CHECK(Frac(7, 3).floor() == 2);
  CHECK(Frac(-7, 3).floor() == -3);
  CHECK(Frac(7, 3).frac_part() == Frac(1, 3));
  CHECK(Frac::parse("-3/4") == Frac(-3, 4));
  CHECK(Frac(-3, 4).str() == "-3/4");
  CHECK(Frac(5).str() == "5/1");
}

TEST_CASE("overflow aborts loudly instead of wrapping") {
  Frac huge(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  CHECK_THROWS_AS(Frac(1, 0), std::domain_error);
  CHECK_THROWS_AS(Frac(1) / Frac(0), std::domain_error);
}

TEST_CASE("lattice membership: Z^2 and D_2") {
  Lattice z2 = Lattice::from_generators({qv({Frac(1), Frac(0)}), qv({Frac(0), Frac(1)})});
  CHECK(z2.contains(qv({Frac(3), Frac(-2)})));
  CHECK_FALSE(z2.contains(qv({Frac(1, 2), Frac(0)})));

  Lattice d2 = Lattice::from_generators({qv({Frac(1), Frac(1)}), qv({Frac(1), Frac(-1)})});
  CHECK_FALSE(d2.contains(qv({Frac(1), Frac(0)})));  // a=b=1/2 not integral
  CHECK(d2.contains(qv({Frac(2), Frac(0)})));        // a=b=1
}

TEST_CASE("solve_integral: identity basis and the D_4 parity obstruction") {
  std::vector<QVector> id_basis = {qv({Frac(1), Frac(0), Frac(0)}),
                                   qv({Frac(0), Frac(1), Frac(0)}),
                                   qv({Frac(0), Frac(0), Frac(1)})};
  auto sol = solve_integral(id_basis, qv({Frac(4), Frac(-7), Frac(0)}));
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<std::int64_t>{4, -7, 0});

  std::vector<QVector> d4_basis = {
      qv({Frac(1), Frac(-1), Frac(0), Frac(0)}),
      qv({Frac(0), Frac(1), Frac(-1), Frac(0)}),
      qv({Frac(0), Frac(0), Frac(1), Frac(-1)}),
      qv({Frac(0), Frac(0), Frac(1), Frac(1)})};
  QVector v = qv({Frac(1), Frac(1), Frac(0), Frac(0)});
  auto coeffs = solve_integral(d4_basis, v);
  REQUIRE(coeffs.has_value());
  QVector rebuilt(4);
  for (std::size_t i = 0; i < 4; ++i)
    rebuilt = rebuilt + (Frac((*coeffs)[i]) * d4_basis[i]);
  CHECK(rebuilt == v);

  // Odd coordinate sum cannot be reached.
  CHECK_FALSE(solve_integral(d4_basis, qv({Frac(1), Frac(0), Frac(0), Frac(0)})));
}

TEST_CASE("canonical representatives") {
  Lattice z1 = Lattice::from_generators({qv({Frac(1)})});
  CHECK(z1.canonical_rep(qv({Frac(7, 3)})) == qv({Frac(1, 3)}));

  Lattice d2 = Lattice::from_generators({qv({Frac(1), Frac(1)}), qv({Frac(1), Frac(-1)})});
  CHECK(d2.canonical_rep(qv({Frac(3, 2), Frac(1, 2)})) ==
        qv({Frac(1, 2), Frac(1, 2)}));
  CHECK(d2.canonical_rep(qv({Frac(3), Frac(1)})) == qv({Frac(0), Frac(0)}));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    QVector v = qv({random_frac(rng), random_frac(rng)});
    QVector rep = d2.canonical_rep(v);
    CHECK(d2.canonical_rep(rep) == rep);  // retraction
    CHECK(d2.contains(v - rep));
  }
}

TEST_CASE("canonical_rep rejects vectors outside the span") {
  Lattice line = Lattice::from_generators({qv({Frac(1), Frac(-1)})});
  CHECK_THROWS_AS(line.canonical_rep(qv({Frac(1), Frac(1)})), std::domain_error);
  CHECK_FALSE(line.contains(qv({Frac(1), Frac(1)})));
}

TEST_CASE("dimension mismatches throw") {
  Lattice z1 = Lattice::from_generators({qv({Frac(1)})});
  CHECK_THROWS_AS(z1.contains(qv({Frac(1), Frac(0)})), std::invalid_argument);
  CHECK_THROWS_AS(Lattice::from_generators(
                      {qv({Frac(1), Frac(0)}), qv({Frac(2), Frac(0)})}),
                  std::invalid_argument);  // dependent generators
}

TEST_CASE("every catalog Weyl matrix preserves its coroot lattice") {
  for (GroupType t : {GroupType{Family::A, 3}, GroupType{Family::B, 3},
                      GroupType{Family::C, 3}, GroupType{Family::D, 4},
                      GroupType{Family::G2, 2}, GroupType{Family::F4, 4}}) {
    TypeModel model = build(t, ActionMode::torus);
    const Lattice& lat = *model.space.lattice;
    const WeylGroup& w = *model.space.group;
    std::mt19937_64 rng(t.rank * 977 + static_cast<int>(t.family));
    for (int i = 0; i < 50; ++i) {
      ElementId id = static_cast<ElementId>(rng() % w.order());
      for (const QVector& g : lat.generators()) {
        CHECK(lat.contains(w.element(id) * g));
        // v in L <=> w v in L, both directions.
        QVector shifted = g + g;
        CHECK(lat.contains(w.element(id) * shifted));
      }
    }
  }
}
