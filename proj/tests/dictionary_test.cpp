#include <doctest.h>

#include "uvlab/dictionary.hpp"
#include "uvlab/errors.hpp"

using namespace uvlab;

namespace {

DualSpace d(int k) { return uv_dual(powerset_ba(k)); }

}  // namespace

TEST_CASE("eta lands on principal upsets and reverses order") {
  DualSpace d2 = d(2);
  auto filters = enumerate_proper_filters(d2.algebra);
  // up(a) translates to the single point carrying that filter
  for (const BAFilter& f : filters) {
    Mask e = eta(d2, f);
    CHECK(e == d2.space.order.up[d2.point_of_filter(f.elems)]);
  }
  // the trivial filter covers every point
  auto top = filter_generated(d2.algebra, 0);
  CHECK(eta(d2, *top) == d2.space.carrier());

  DualSpace d3 = d(3);
  auto f3 = enumerate_proper_filters(d3.algebra);
  for (const BAFilter& f : f3)
    for (const BAFilter& g : f3)
      CHECK(mask_subset(f.elems, g.elems) ==
            mask_subset(eta(d3, g), eta(d3, f)));
  CHECK_THROWS_AS(eta(d2, BAFilter{full_mask(d2.algebra.size())}),
                  ImproperFilter);
}

TEST_CASE("zeta is an order isomorphism onto ORO") {
  DualSpace d2 = d(2);
  // down(a): the points whose filters contain something below a
  BAIdeal down_a{(Mask{1} << 0) | (Mask{1} << 1)};
  CHECK(zeta(d2, down_a) == hat(d2, 1));
  CHECK(zeta(d2, BAIdeal{Mask{1} << 0}) == 0);
  CHECK(zeta(d2, BAIdeal{full_mask(d2.algebra.size())}) ==
        d2.space.carrier());

  for (int k = 1; k <= 4; ++k) {
    DualSpace dk = d(k);
    auto ideals = enumerate_ideals(dk.algebra);
    std::vector<Mask> images;
    for (const BAIdeal& i : ideals) images.push_back(zeta(dk, i));
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j)
        CHECK(mask_subset(ideals[i].elems, ideals[j].elems) ==
              mask_subset(images[i], images[j]));
    std::vector<Mask> family = oro(dk.space);
    sort_family(images);
    sort_family(family);
    CHECK(images == family);
  }
}

TEST_CASE("maximal rows") {
  CHECK(maximal_rows(d(2)).pass);
  CHECK(maximal_rows(d(1)).pass);
  DictReport r3 = maximal_rows(d(3));
  CHECK(r3.pass);
  CHECK(r3.left_census == 3);
  CHECK(r3.right_census == 3);
}

TEST_CASE("relativization row") {
  DualSpace d3 = d(3);
  COROAlgebra c = coro_algebra(d3.space);
  // a two-atom element: the subspace is the dual of the two-atom algebra
  DictReport r = relativization_row(d3.space, c.sets[0b011]);
  CHECK(r.pass);
  CHECK(r.left_census == 4);
  CHECK(relativization_row(d3.space, c.sets[c.ba.one()]).pass);
  CHECK(relativization_row(d3.space, c.sets[0b001]).pass);
}

TEST_CASE("meet and join formulas") {
  DualSpace d3 = d(3);
  COROAlgebra c = coro_algebra(d3.space);
  // all the atom sets join to the whole space
  std::vector<Mask> atoms;
  for (int i = 0; i < 3; ++i) atoms.push_back(c.sets[Mask{1} << i]);
  CHECK(meet_join_formulas(d3.space, atoms).pass);
  CHECK(meet_join_formulas(d3.space, {c.sets[0b011]}).pass);
  CHECK(meet_join_formulas(d3.space, {}).pass);
}

TEST_CASE("atoms row") {
  DictReport r = atoms_row(d(2).space);
  CHECK(r.pass);
  CHECK(r.left_census == 2);
  CHECK(atoms_row(d(1).space).pass);
  CHECK(atoms_row(d(3).space).pass);
}

TEST_CASE("UV-sums") {
  FiniteSpace pv{validate_poset({{"x", "y1"}, {"x", "y2"}})};
  FiniteSpace pt{validate_poset({"z"}, {})};
  UVSum s = uv_sum(pv, pt);
  CHECK(s.space.points() == 7);
  UVSum pp = uv_sum(pt, pt);
  CHECK(pp.space.points() == 3);
  CHECK(order_isomorphic(pp.space.order, pv.order));
  CHECK_THROWS_AS(uv_sum(FiniteSpace{validate_poset({{"x", "y"}})}, pt),
                  NotUVSpace);
}

TEST_CASE("size law for sums of small duals") {
  for (int ka = 1; ka <= 2; ++ka)
    for (int kb = 1; kb <= 2; ++kb) {
      FiniteSpace x = uv_dual(powerset_ba(ka)).space;
      FiniteSpace y = uv_dual(powerset_ba(kb)).space;
      UVSum s = uv_sum(x, y);
      CHECK(s.space.points() ==
            x.points() + y.points() + x.points() * y.points());
    }
}

TEST_CASE("sums against products") {
  CHECK(check_sum_product(powerset_ba(2), powerset_ba(1)).pass);
  CHECK(check_sum_product(powerset_ba(1), powerset_ba(1)).pass);
  for (int ka = 1; ka <= 4; ++ka)
    for (int kb = 1; ka + kb <= 5; ++kb)
      CHECK(check_sum_product(powerset_ba(ka), powerset_ba(kb)).pass);
}

TEST_CASE("splitting along a CORO set") {
  DualSpace d3 = d(3);
  COROAlgebra c = coro_algebra(d3.space);
  SplitWitness w = split_by_coro(d3.space, c.sets[0b001]);
  CHECK(w.ok);
  CHECK(w.inside.space.points() == 1);
  CHECK(w.outside.space.points() == 3);

  DualSpace d2 = d(2);
  COROAlgebra c2 = coro_algebra(d2.space);
  SplitWitness w2 = split_by_coro(d2.space, c2.sets[0b01]);
  CHECK(w2.ok);
  CHECK_THROWS_AS(split_by_coro(d2.space, d2.space.carrier()), TrivialSplit);
}

TEST_CASE("canonical extension collapses onto the CORO algebra") {
  CHECK(canonical_extension(d(2).space).atoms == 2);
  CHECK(canonical_extension(d(1).space).atoms == 1);
  for (int k = 1; k <= 3; ++k)
    CHECK(canonical_extension(d(k).space).atoms == k);
}

TEST_CASE("the MacNeille maps invert each other") {
  DictReport r2 = macneille(d(2).space);
  CHECK(r2.pass);
  CHECK(r2.left_census == 4);   // normal ideals
  CHECK(r2.right_census == 4);  // space-regular-opens
  for (int k = 1; k <= 4; ++k) CHECK(macneille(d(k).space).pass);
}
