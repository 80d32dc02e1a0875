#include <doctest.h>

#include "uvlab/duality.hpp"
#include "uvlab/enumerate.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/space.hpp"

using namespace uvlab;

namespace {

FiniteSpace fork_space() {
  return FiniteSpace{validate_poset({{"x", "y1"}, {"x", "y2"}})};
}
FiniteSpace chain_space() { return FiniteSpace{validate_poset({{"x", "y"}})}; }
FiniteSpace point_space() { return FiniteSpace{validate_poset({"p"}, {})}; }

}  // namespace

TEST_CASE("set families of the fork") {
  FiniteSpace pv = fork_space();
  CHECK(co(pv).size() == 5);    // the five upsets
  CHECK(coro(pv).size() == 4);  // drops {y1,y2}
  CHECK(coro(pv) == std::vector<Mask>{0, 0b010, 0b100, 0b111});
  CHECK(coro(chain_space()) == std::vector<Mask>{0, 0b11});
  FiniteSpace pt = point_space();
  for (auto fam : {co(pt), coro(pt), cro(pt), oro(pt), ro(pt)})
    CHECK(fam == std::vector<Mask>{0, 1});
}

TEST_CASE("pseudocomplement via disjoint opens") {
  FiniteSpace pv = fork_space();
  CHECK(star(pv, 0b010) == 0b100);
  CHECK(star(pv, 0) == 0b111);
  CHECK(star(pv, 0b111) == 0);
  CHECK_THROWS_AS(star(pv, 0b001), NotOpen);  // {x} is not an upset
}

TEST_CASE("the Alexandroff identity holds on small spaces") {
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      CHECK(verify_alexandroff(FiniteSpace{poset_from_up_rows(up)}));
    });
}

TEST_CASE("finite poset-spaces are spectral") {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      SpectralReport r = is_spectral(FiniteSpace{poset_from_up_rows(up)});
      CHECK(r.ok());
    });
  CHECK(is_spectral(chain_space()).ok());
  CHECK(is_spectral(point_space()).ok());
}

TEST_CASE("sobriety matches the literal completely-prime filter sweep") {
  // tiny spaces: enumerate all filters of the open lattice literally and
  // compare with the principal/join-irreducible route
  for (int n = 1; n <= 3; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      FiniteSpace x{poset_from_up_rows(up)};
      std::vector<Mask> opens;
      FiniteLattice l = open_set_lattice(x, &opens);
      int m = l.n;
      std::vector<int> literal;
      for (Mask sub = 1; sub < (Mask{1} << m); ++sub) {
        bool filter = true;
        for (int i : mask_elems(sub)) {
          if (i == l.bottom) filter = false;
          for (int j = 0; j < m; ++j)
            if (l.leq_at(i, j) && !mask_has(sub, j)) filter = false;
          for (int j : mask_elems(sub))
            if (!mask_has(sub, l.meet_at(i, j))) filter = false;
        }
        if (!filter) continue;
        bool prime = true;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (mask_has(sub, l.join_at(a, b)) && !mask_has(sub, a) &&
                !mask_has(sub, b))
              prime = false;
        if (!prime) continue;
        // completely prime filters of a finite lattice are principal
        int least = -1;
        for (int i : mask_elems(sub)) {
          bool isleast = true;
          for (int j : mask_elems(sub)) isleast &= l.leq_at(i, j);
          if (isleast) least = i;
        }
        REQUIRE(least >= 0);
        literal.push_back(least);
      }
      std::vector<int> generators = completely_prime_generators(l);
      std::sort(literal.begin(), literal.end());
      std::sort(generators.begin(), generators.end());
      CHECK(literal == generators);
    });
}

TEST_CASE("UV axioms: fork yes, chain no, point yes") {
  CHECK(is_uv_space(fork_space()).ok());
  UVReport chain = is_uv_space(chain_space());
  CHECK(!chain.ok());
  CHECK(!chain.basis);  // {y} is open but no union of CORO sets gives it
  CHECK(is_uv_space(point_space()).ok());
}

TEST_CASE("the CORO algebra of the fork") {
  COROAlgebra c = coro_algebra(fork_space());
  CHECK(c.ba.atoms == 2);
  CHECK(c.sets[0] == 0);
  CHECK(c.sets[c.ba.one()] == 0b111);
  CHECK_THROWS_AS(coro_algebra(chain_space()), NotUVSpace);
  CHECK(coro_algebra(point_space()).ba.atoms == 1);
}

TEST_CASE("member families at points") {
  FiniteSpace pv = fork_space();
  CHECK(coro_at(pv, 1) == std::vector<Mask>{0b010, 0b111});
  CHECK(coro_at(pv, 0) == std::vector<Mask>{0b111});
  CHECK_THROWS_AS(coro_at(pv, 7), UnknownElement);
}

TEST_CASE("meets and decompositions") {
  FiniteSpace pv = fork_space();
  CHECK(meet_point(pv, 1, 2) == 0);
  CHECK(meet_point(pv, 1, 1) == 1);
  // a missing meet flags a non-UV space
  FiniteSpace anti{validate_poset({"a", "b"}, {})};
  CHECK_THROWS_AS(meet_point(anti, 0, 1), NoMeet);

  auto [p, q] = decompose(pv, 0b010, 0);
  CHECK(p == 1);
  CHECK(q == 2);
  // points already inside U or neg U have no proper witness pair
  CHECK_THROWS_AS(decompose(pv, 0b010, 1), NoWitness);
  // vacuous case: neg of the whole carrier is empty
  CHECK_THROWS_AS(decompose(point_space(), 1, 0), NoWitness);
  CHECK_THROWS_AS(decompose(pv, 0b011, 0), NotCORO);
}

TEST_CASE("joins two ways") {
  FiniteSpace pv = fork_space();
  CHECK(join_coro(pv, 0b010, 0b100) == 0b111);
  CHECK(join_via_meets(pv, 0b010, 0b100) == 0b111);
  CHECK(join_coro(pv, 0b010, 0) == 0b010);
  CHECK(join_coro(pv, 0b010, 0b010) == 0b010);
  CHECK_THROWS_AS(join_coro(pv, 0b011, 0), NotCORO);
}

TEST_CASE("subspaces") {
  FiniteSpace pv = fork_space();
  SubspaceResult s = subspace(pv, 0b010);
  CHECK(s.space.points() == 1);
  SubspaceResult whole = subspace(pv, 0b111);
  CHECK(whole.space.points() == 3);
  CHECK(order_isomorphic(whole.space.order, pv.order));
  CHECK_THROWS_AS(subspace(pv, 0b110), NotCORO);
}

TEST_CASE("isolated points and completeness") {
  FiniteSpace pv = fork_space();
  CHECK(isolated_points(pv) == 0b110);
  CHECK(is_complete_uv(pv));
  CHECK(isolated_points(point_space()) == 1);
  CHECK(is_complete_uv(point_space()));
}

TEST_CASE("map classification") {
  FiniteSpace pv = fork_space();
  SpaceMap id{pv, pv, {0, 1, 2}};
  CHECK(is_spectral_map(id));
  CHECK(is_uv_map(id));
  CHECK(is_uv_embedding(id));

  // collapse to the point: spectral and a p-morphism, not an embedding
  SpaceMap collapse{pv, point_space(), {0, 0, 0}};
  CHECK(is_spectral_map(collapse));
  CHECK(is_uv_map(collapse));
  CHECK(!is_uv_embedding(collapse));

  // chain into the fork misses the lift over y2
  SpaceMap bad{chain_space(), pv, {0, 1}};
  CHECK(is_spectral_map(bad));
  CHECK(!is_uv_map(bad));
}

TEST_CASE("CORO sets are filters for the point meet") {
  // on every UV-space up to 7 points (the duals of 1..3 atoms)
  for (int k = 1; k <= 3; ++k) {
    FiniteSpace x = uv_dual(powerset_ba(k)).space;
    for (Mask u : coro(x))
      for (int p : mask_elems(u))
        for (int q : mask_elems(u)) {
          auto m = poset_meet(x.order, p, q);
          REQUIRE(m.has_value());
          CHECK(mask_has(u, *m));
        }
  }
}

TEST_CASE("a UV-space is its CORO algebra minus the top, reversed") {
  for (int k = 1; k <= 3; ++k) {
    FiniteSpace x = uv_dual(powerset_ba(k)).space;
    COROAlgebra c = coro_algebra(x);
    // nonzero elements under the reversed order
    int m = c.ba.size() - 1;
    std::vector<Mask> up(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (c.ba.leq(static_cast<Mask>(j + 1), static_cast<Mask>(i + 1)))
          up[i] |= Mask{1} << j;
    CHECK(order_isomorphic(x.order, poset_from_up_rows(up)));
  }
}

TEST_CASE("maximal points carry maximal member families") {
  FiniteSpace x = uv_dual(powerset_ba(2)).space;
  for (int p : mask_elems(x.order.maximal_elements())) {
    std::vector<Mask> at = coro_at(x, p);
    // adding any missing CORO set would force the empty set in
    for (Mask u : coro(x)) {
      if (std::find(at.begin(), at.end(), u) != at.end()) continue;
      bool meets_all = true;
      for (Mask v : at) meets_all &= (u & v) != 0;
      CHECK(!meets_all);
    }
  }
}

TEST_CASE("space-regular-opens are order-regular-opens, small spaces") {
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      Poset p = poset_from_up_rows(up);
      FiniteSpace x{p};
      for (Mask u : ro(x)) CHECK(is_ro_upset(p, u));
    });
}

TEST_CASE("order-preserving p-morphisms pull back order-regular-opens") {
  // property over random-ish small maps: when the p-morphism condition
  // holds, preimages of RO upsets are RO upsets
  for (int n = 2; n <= 4; ++n)
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      Poset cod = poset_from_up_rows(up);
      Poset dom = validate_poset({{"x", "y1"}, {"x", "y2"}});
      // try all maps from the fork into cod
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            std::vector<int> f{a, b, c};
            bool mono = true, pmorph = true;
            for (int u = 0; u < 3; ++u)
              for (int v = 0; v < 3; ++v)
                if (dom.leq(u, v) && !cod.leq(f[u], f[v])) mono = false;
            for (int u = 0; u < 3 && mono; ++u)
              for (int w : mask_elems(cod.up[f[u]])) {
                bool lifted = false;
                for (int v : mask_elems(dom.up[u]))
                  lifted |= f[v] == w;
                pmorph &= lifted;
              }
            if (!mono || !pmorph) continue;
            for (Mask u : all_ro_upsets(cod)) {
              Mask pre = 0;
              for (int p = 0; p < 3; ++p)
                if (mask_has(u, f[p])) pre |= Mask{1} << p;
              CHECK(is_ro_upset(dom, pre));
            }
          }
    });
}
