#include <doctest.h>

#include <algorithm>
#include <random>

#include "uvlab/duality.hpp"
#include "uvlab/enumerate.hpp"
#include "uvlab/errors.hpp"

using namespace uvlab;

TEST_CASE("dual spaces of small algebras") {
  DualSpace d2 = uv_dual(powerset_ba(2));
  CHECK(d2.space.points() == 3);
  CHECK(order_isomorphic(d2.space.order,
                         validate_poset({{"x", "y1"}, {"x", "y2"}})));
  DualSpace d1 = uv_dual(powerset_ba(1));
  CHECK(d1.space.points() == 1);
  DualSpace d3 = uv_dual(powerset_ba(3));
  CHECK(d3.space.points() == 7);
  CHECK_THROWS_AS(uv_dual(powerset_ba(0)), DegenerateBA);
}

TEST_CASE("hat sets") {
  FiniteBA b2 = powerset_ba(2);
  DualSpace d = uv_dual(b2);
  CHECK(mask_size(hat(d, 1)) == 1);  // one filter contains the atom alone
  CHECK(hat(d, b2.one()) == d.space.carrier());
  CHECK(hat(d, 0) == 0);
  CHECK_THROWS_AS(hat(d, Mask{1} << 5), UnknownElement);
}

TEST_CASE("representation holds for one to five atoms") {
  for (int k = 1; k <= 5; ++k) {
    RepresentationReport r = check_representation(powerset_ba(k));
    CHECK(r.ok);
    CHECK(r.atoms == k);
  }
}

TEST_CASE("epsilon is a homeomorphism on UV-spaces") {
  FiniteSpace pv{validate_poset({{"x", "y1"}, {"x", "y2"}})};
  EpsilonResult e = epsilon(pv);
  CHECK(e.dual.space.points() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(pv.order.leq(i, j) ==
            e.dual.space.order.leq(e.map.map[i], e.map.map[j]));
  CHECK_THROWS_AS(epsilon(FiniteSpace{validate_poset({{"x", "y"}})}),
                  NotUVSpace);
}

TEST_CASE("round trips both ways at small scale") {
  // algebra side: the CORO algebra of the dual recovers the atom count
  for (int k = 1; k <= 5; ++k)
    CHECK(coro_algebra(uv_dual(powerset_ba(k)).space).ba.atoms == k);

  // space side: a poset-space is homeomorphic to the dual of its CORO
  // algebra exactly when it satisfies the UV axioms
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      FiniteSpace x{poset_from_up_rows(up)};
      bool uv = is_uv_space(x).ok();
      if (uv) {
        EpsilonResult e = epsilon(x);
        CHECK(homeomorphic(x, e.dual.space));
      }
    });
}

TEST_CASE("duals of homomorphisms") {
  FiniteBA b1 = powerset_ba(1), b2 = powerset_ba(2);

  // the unique embedding of the two-element algebra
  BAHom h = enumerate_homs(b1, b2)[0];
  DualHomResult dh = dual_hom(h);
  CHECK(dh.map.dom.points() == 3);
  CHECK(dh.map.cod.points() == 1);
  for (int v : dh.map.map) CHECK(v == 0);

  // identity dualizes to the identity
  DualHomResult did = dual_hom(identity_hom(b2));
  for (int i = 0; i < did.map.dom.points(); ++i) CHECK(did.map.map[i] == i);

  // a surjection dualizes to an embedding landing on a maximal point
  for (const BAHom& s : enumerate_homs(b2, b1)) {
    DualHomResult ds = dual_hom(s);
    CHECK(is_uv_embedding(ds.map));
    CHECK(mask_has(ds.map.cod.order.maximal_elements(), ds.map.map[0]));
  }

  BAHom broken{b2, b2, std::vector<Mask>(4, 0)};
  CHECK_THROWS_AS(dual_hom(broken), NotAHomomorphism);
}

TEST_CASE("duals of UV-maps") {
  FiniteSpace pv{validate_poset({{"x", "y1"}, {"x", "y2"}})};
  FiniteSpace pt{validate_poset({"z"}, {})};

  BAHom idh = dual_map(SpaceMap{pv, pv, {0, 1, 2}});
  for (Mask e = 0; e < static_cast<Mask>(idh.dom.size()); ++e)
    CHECK(idh.map[e] == e);

  BAHom collapse = dual_map(SpaceMap{pv, pt, {0, 0, 0}});
  CHECK(collapse.dom.atoms == 1);
  CHECK(collapse.cod.atoms == 2);
  CHECK(is_injective(collapse));

  CHECK_THROWS_AS(
      dual_map(SpaceMap{FiniteSpace{validate_poset({{"x", "y"}})}, pv, {0, 1}}),
      NotAUVMap);
}

TEST_CASE("principal-upset subspaces dualize to surjections") {
  // the inclusion of the subspace induced by the upset of a point is a
  // UV-embedding whose dual homomorphism is onto
  for (int k = 2; k <= 3; ++k) {
    FiniteSpace x = uv_dual(powerset_ba(k)).space;
    for (int p = 0; p < x.points(); ++p) {
      Mask up = x.order.up[p];
      SubspaceResult sub = subspace(x, up);
      SpaceMap incl{sub.space, x, sub.to_parent};
      CHECK(is_uv_embedding(incl));
      BAHom onto = dual_map(incl);
      CHECK(is_surjective(onto));
      CHECK(onto.cod.atoms == coro_algebra(sub.space).ba.atoms);
    }
  }
}

TEST_CASE("compact-open preimages of the subbasis force spectral maps") {
  // over every map between small duals: if the preimage of each basic hat
  // set is compact open, the map passes the full spectral classification
  std::mt19937_64 rng(19);
  for (int ka : {1, 2, 3})
    for (int kb : {1, 2, 3}) {
      DualSpace dx = uv_dual(powerset_ba(ka));
      DualSpace dy = uv_dual(powerset_ba(kb));
      int nx = dx.space.points(), ny = dy.space.points();
      std::vector<Mask> dom_co = co(dx.space);
      std::vector<Mask> dom_co_sorted = dom_co;
      std::sort(dom_co_sorted.begin(), dom_co_sorted.end());

      std::uint64_t total = 1;
      for (int i = 0; i < nx; ++i) total *= static_cast<std::uint64_t>(ny);
      std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
      int samples = total <= 512 ? static_cast<int>(total) : 512;
      for (int s = 0; s < samples; ++s) {
        std::uint64_t idx =
            total <= 512 ? static_cast<std::uint64_t>(s) : pick(rng);
        SpaceMap f{dx.space, dy.space, std::vector<int>(nx)};
        std::uint64_t t = idx;
        for (int i = 0; i < nx; ++i) {
          f.map[i] = static_cast<int>(t % ny);
          t /= ny;
        }
        bool subbasis_co = true;
        for (Mask e = 0; e < static_cast<Mask>(dy.algebra.size()); ++e)
          subbasis_co &= std::binary_search(dom_co_sorted.begin(),
                                            dom_co_sorted.end(),
                                            f.preimage(hat(dy, e)));
        CHECK(subbasis_co == is_spectral_map(f));
      }
    }
}

TEST_CASE("commuting squares and the inj/surj dictionary") {
  for (int ka = 1; ka <= 2; ++ka)
    for (int kb = 1; kb <= 2; ++kb)
      for (const BAHom& h :
           enumerate_homs(powerset_ba(ka), powerset_ba(kb))) {
        CHECK(check_squares(h));
        CHECK(check_squares_space(dual_hom(h).map));
        CHECK(check_injective_surjective_duality(h).ok);
      }
}
