#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylgenus/catalog.hpp"
#include "weylgenus/orbits.hpp"
#include "weylgenus/weyl.hpp"

using namespace genus;

namespace {

QMatrix perm2_swap() {
  QMatrix m(2);
  m.at(0, 1) = Frac(1);
  m.at(1, 0) = Frac(1);
  return m;
}

QMatrix flip_first(std::size_t dim) {
  QMatrix m = QMatrix::identity(dim);
  m.at(0, 0) = Frac(-1);
  return m;
}

}  // namespace

TEST_CASE("closure of the identity alone") {
  WeylGroup g = WeylGroup::close_generators({QMatrix::identity(3)});
  CHECK(g.order() == 1);
}

TEST_CASE("B2 closure has order 8 = 2^2 * 2!") {
  WeylGroup g = WeylGroup::close_generators({perm2_swap(), flip_first(2)});
  CHECK(g.order() == 8);
  CHECK(g.reflection_ids().size() == 4);  // two short, two long
}

TEST_CASE("orders from closure match the classical factorial formulas") {
  for (int n = 1; n <= 4; ++n)
    CHECK(weyl_group({Family::A, n})->order() == expected_weyl_order({Family::A, n}));
  for (int n = 1; n <= 4; ++n)
    CHECK(weyl_group({Family::B, n})->order() == expected_weyl_order({Family::B, n}));
  for (int n = 2; n <= 4; ++n)
    CHECK(weyl_group({Family::D, n})->order() == expected_weyl_order({Family::D, n}));
  CHECK(weyl_group({Family::G2, 2})->order() == 12);
  CHECK(weyl_group({Family::F4, 4})->order() == 1152);
}

TEST_CASE("closure size bound aborts") {
  CHECK_THROWS_AS(
      WeylGroup::close_generators({perm2_swap(), flip_first(2)}, 4),
      ResourceError);
}

TEST_CASE("subgroup construction checks closure") {
  WeylGroup g = WeylGroup::close_generators({perm2_swap(), flip_first(2)});
  Subgroup trivial = Subgroup::from_ids(g, {0});
  CHECK(trivial.order() == 1);
  CHECK(trivial.fingerprint().order == 1);

  std::vector<ElementId> all;
  for (ElementId i = 0; i < static_cast<ElementId>(g.order()); ++i)
    all.push_back(i);
  CHECK(Subgroup::from_ids(g, all).order() == 8);

  ElementId swap_id = *g.lookup(perm2_swap());
  CHECK_THROWS_AS(Subgroup::from_ids(g, {0, swap_id, *g.lookup(flip_first(2))}),
                  std::invalid_argument);  // swap*flip missing
  CHECK_THROWS_AS(Subgroup::from_ids(g, {swap_id}), std::invalid_argument);
}

TEST_CASE("are_conjugate distinguishes short and long reflections in B2") {
  WeylGroup g = WeylGroup::close_generators({perm2_swap(), flip_first(2)});
  ElementId swap_id = *g.lookup(perm2_swap());
  ElementId flip_id = *g.lookup(flip_first(2));
  Subgroup h_swap = Subgroup::from_ids(g, {0, swap_id});
  Subgroup h_flip = Subgroup::from_ids(g, {0, flip_id});
  CHECK_FALSE(are_conjugate(h_swap, h_flip).conjugate);

  auto self = are_conjugate(h_swap, h_swap);
  CHECK(self.conjugate);
  CHECK(self.witness == 0);
}

TEST_CASE("exotic D4 stabilizer of order 24 is not conjugate to the standard S4") {
  TypeModel model = build({Family::D, 4}, ActionMode::linear);
  const WeylGroup& g = *model.space.group;
  Subgroup exotic = stabilizer(
      model.space, QVector{Frac(1), Frac(1), Frac(1), Frac(-1)});
  CHECK(exotic.order() == 24);

  std::vector<std::size_t> perm{0, 1, 2, 3};
  std::vector<ElementId> s4_ids;
  do {
    QMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i) m.at(perm[i], i) = Frac(1);
    s4_ids.push_back(*g.lookup(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Subgroup s4 = Subgroup::from_ids(g, std::move(s4_ids));
  CHECK(s4.order() == 24);
  CHECK_FALSE(are_conjugate(exotic, s4).conjugate);
}

TEST_CASE("fingerprints are conjugation-invariant; witnesses are exact") {
  auto gptr = weyl_group({Family::B, 3});
  const WeylGroup& g = *gptr;
  TypeModel model = build({Family::B, 3}, ActionMode::torus);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    QVector point(3);
    std::int64_t den = 1 + rng() % 8;
    for (int k = 0; k < 3; ++k)
      point[k] = Frac(static_cast<std::int64_t>(rng() % (2 * den)), den);
    Subgroup h = stabilizer(model.space, point);
    ElementId c = static_cast<ElementId>(rng() % g.order());
    std::vector<ElementId> moved;
    for (ElementId m : h.members()) moved.push_back(g.conjugate(c, m));
    Subgroup hc = Subgroup::from_ids(g, std::move(moved));
    CHECK(hc.fingerprint() == h.fingerprint());
    auto res = are_conjugate(h, hc);
    REQUIRE(res.conjugate);
    std::vector<ElementId> image;
    for (ElementId m : h.members())
      image.push_back(g.conjugate(*res.witness, m));
    std::sort(image.begin(), image.end());
    CHECK(image == hc.members());
  }
}

TEST_CASE("reflection closure") {
  WeylGroup g = WeylGroup::close_generators({perm2_swap(), flip_first(2)});
  Subgroup trivial = Subgroup::from_ids(g, {0});
  CHECK(reflection_closure(trivial).order() == 1);

  std::vector<ElementId> all;
  for (ElementId i = 0; i < 8; ++i) all.push_back(i);
  CHECK(reflection_closure(Subgroup::from_ids(g, all)).order() == 8);

  // -I is a rotation by pi, not a reflection; alone it closes to nothing.
  QMatrix neg = QMatrix::identity(2);
  neg.at(0, 0) = Frac(-1);
  neg.at(1, 1) = Frac(-1);
  Subgroup rot = Subgroup::from_ids(g, {0, *g.lookup(neg)});
  CHECK(reflection_closure(rot).order() == 1);
}

TEST_CASE("minimal generators rebuild their subgroup") {
  auto gptr = weyl_group({Family::F4, 4});
  const WeylGroup& g = *gptr;
  TypeModel model = build({Family::F4, 4}, ActionMode::linear);
  Subgroup h = stabilizer(model.space,
                          QVector{Frac(0), Frac(0), Frac(1), Frac(1)});
  auto gens = g.minimal_generators(h.members());
  CHECK(gens.size() <= 4);
  CHECK(g.close_subset(gens) == h.members());
}
