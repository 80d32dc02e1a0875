#include <doctest.h>

#include "uvlab/balg.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/limits.hpp"

using namespace uvlab;

TEST_CASE("powerset algebras") {
  FiniteBA b1 = powerset_ba(1);
  CHECK(b1.size() == 2);
  FiniteBA b2 = powerset_ba(2);
  CHECK(b2.size() == 4);
  FiniteBA b0 = powerset_ba(0);
  CHECK(b0.degenerate());
  CHECK(b0.size() == 1);
  CHECK_THROWS_AS(powerset_ba(limits().max_atoms + 1), SizeLimit);
}

TEST_CASE("filters: brute force equals the principal family") {
  for (int k = 1; k <= 4; ++k) {
    FiniteBA a = powerset_ba(k);
    auto brute = enumerate_proper_filters(a);
    auto shortcut = principal_proper_filters(a);
    REQUIRE(brute.size() == shortcut.size());
    CHECK(brute.size() == static_cast<std::size_t>(a.size() - 1));
    for (std::size_t i = 0; i < brute.size(); ++i)
      CHECK(brute[i].elems == shortcut[i].elems);
  }
  // the three filters of the two-atom algebra: up(1), up(a), up(b)
  FiniteBA b2 = powerset_ba(2);
  auto filters = enumerate_proper_filters(b2);
  REQUIRE(filters.size() == 3);
  CHECK(filters[0].generator() == b2.one());
  std::vector<Mask> gens{filters[1].generator(), filters[2].generator()};
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<Mask>{1, 2});
  CHECK(enumerate_proper_filters(powerset_ba(1)).size() == 1);
  CHECK(enumerate_proper_filters(powerset_ba(3)).size() == 7);
}

TEST_CASE("filters ordered by inclusion mirror the reversed algebra") {
  for (int k = 1; k <= 5; ++k) {
    FiniteBA a = powerset_ba(k);
    auto filters = enumerate_proper_filters(a);
    CHECK(filters.size() == static_cast<std::size_t>(a.size() - 1));
    for (const BAFilter& f : filters)
      for (const BAFilter& g : filters)
        CHECK(mask_subset(f.elems, g.elems) ==
              a.leq(g.generator(), f.generator()));
  }
}

TEST_CASE("filter generation") {
  FiniteBA b2 = powerset_ba(2);
  auto up_a = filter_generated(b2, Mask{1} << 1);
  REQUIRE(up_a.has_value());
  CHECK(up_a->generator() == 1);
  CHECK(!filter_generated(b2, (Mask{1} << 1) | (Mask{1} << 2)).has_value());
  auto top = filter_generated(b2, 0);
  REQUIRE(top.has_value());
  CHECK(top->generator() == b2.one());
}

TEST_CASE("ideals are the principal downsets, all normal") {
  FiniteBA b2 = powerset_ba(2);
  auto ideals = enumerate_ideals(b2);
  CHECK(ideals.size() == 4);
  CHECK(enumerate_ideals(powerset_ba(1)).size() == 2);
  for (int k = 1; k <= 4; ++k) {
    FiniteBA a = powerset_ba(k);
    for (const BAIdeal& ideal : enumerate_ideals(a))
      CHECK(is_normal_ideal(a, ideal));
  }
  // down(a) in the two-atom algebra: upper bounds are up(a), whose lower
  // bounds come back to down(a)
  BAIdeal down_a{(Mask{1} << 0) | (Mask{1} << 1)};
  CHECK(is_normal_ideal(b2, down_a));
  CHECK_THROWS_AS(is_normal_ideal(b2, BAIdeal{Mask{1} << 1}), NotAnIdeal);
}

TEST_CASE("table validation accepts the four-element algebra") {
  // carrier ids: 0, a, b, 1 as 0..3
  std::vector<std::vector<int>> meet{{0, 0, 0, 0},
                                     {0, 1, 0, 1},
                                     {0, 0, 2, 2},
                                     {0, 1, 2, 3}};
  std::vector<std::vector<int>> join{{0, 1, 2, 3},
                                     {1, 1, 3, 3},
                                     {2, 3, 2, 3},
                                     {3, 3, 3, 3}};
  std::vector<int> neg{3, 2, 1, 0};
  TableValidation v = ba_from_tables(4, meet, join, neg, 0, 3);
  CHECK(v.ba.atoms == 2);
  CHECK(v.renaming[0] == 0);
  CHECK(v.renaming[3] == 3);

  // breaking the complement row must name the axiom
  std::vector<int> bad_neg{3, 1, 2, 0};
  CHECK_THROWS_WITH_AS(ba_from_tables(4, meet, join, bad_neg, 0, 3),
                       doctest::Contains("complement"), AxiomViolation);

  // the two-element algebra
  TableValidation v2 = ba_from_tables(
      2, {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {1, 0}, 0, 1);
  CHECK(v2.ba.atoms == 1);
}

TEST_CASE("table validation rejects a non-distributive lattice") {
  // the diamond: 0 < a,b,c < 1 with complement picking a fixed partner
  // meets of distinct middles are 0, joins are 1
  int n = 5;  // 0,a,b,c,1 as 0..4
  auto meetf = [&](int x, int y) {
    if (x == y) return x;
    if (x == 0 || y == 0) return 0;
    if (x == 4) return y;
    if (y == 4) return x;
    return 0;
  };
  auto joinf = [&](int x, int y) {
    if (x == y) return x;
    if (x == 4 || y == 4) return 4;
    if (x == 0) return y;
    if (y == 0) return x;
    return 4;
  };
  std::vector<std::vector<int>> meet(n, std::vector<int>(n)),
      join(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      meet[i][j] = meetf(i, j);
      join[i][j] = joinf(i, j);
    }
  std::vector<int> neg{4, 2, 1, 1, 0};
  CHECK_THROWS_AS(ba_from_tables(n, meet, join, neg, 0, 4), AxiomViolation);
}

TEST_CASE("products and relativization") {
  FiniteBA p = product_ba(powerset_ba(2), powerset_ba(1));
  CHECK(p.atoms == 3);
  CHECK(p.size() == 8);
  FiniteBA q = product_ba(powerset_ba(1), powerset_ba(1));
  CHECK(q.atoms == 2);

  FiniteBA b3 = powerset_ba(3);
  Relativization r = relativize(b3, 0b011);
  CHECK(r.ba.atoms == 2);
  CHECK(r.to_parent[r.ba.one()] == 0b011);
  // complement inside the relativized algebra: rel_to and-not c
  for (Mask c = 0; c < static_cast<Mask>(r.ba.size()); ++c)
    CHECK(r.to_parent[r.ba.complement(c)] == (Mask{0b011} & ~r.to_parent[c]));
  CHECK(relativize(b3, b3.one()).ba.atoms == 3);
  CHECK(relativize(b3, 0b001).ba.atoms == 1);
  CHECK_THROWS_AS(relativize(b3, 0), ZeroRelativization);
}

TEST_CASE("homomorphisms") {
  FiniteBA b1 = powerset_ba(1), b2 = powerset_ba(2);
  BAHom id = identity_hom(b2);
  CHECK(is_homomorphism(id));
  CHECK(is_injective(id));
  CHECK(is_surjective(id));

  BAHom constant{b2, b2, std::vector<Mask>(4, b2.one())};
  CHECK(!is_homomorphism(constant));

  auto homs12 = enumerate_homs(b1, b2);
  CHECK(homs12.size() == 1);
  CHECK(is_injective(homs12[0]));
  CHECK(!is_surjective(homs12[0]));

  auto homs21 = enumerate_homs(b2, b1);
  CHECK(homs21.size() == 2);

  auto homs22 = enumerate_homs(b2, b2);
  CHECK(homs22.size() == 4);
  int isos = 0;
  for (const BAHom& h : homs22)
    if (is_injective(h) && is_surjective(h)) ++isos;
  CHECK(isos == 2);
}

TEST_CASE("hom enumeration matches the exhaustive map filter") {
  // all |cod|^|dom| element maps at tiny scale
  for (int ka : {1, 2})
    for (int kb : {1, 2}) {
      FiniteBA a = powerset_ba(ka), b = powerset_ba(kb);
      std::uint64_t all = 1;
      for (int i = 0; i < a.size(); ++i)
        all *= static_cast<std::uint64_t>(b.size());
      std::uint64_t found = 0;
      for (std::uint64_t idx = 0; idx < all; ++idx) {
        std::uint64_t t = idx;
        BAHom h{a, b, std::vector<Mask>(a.size())};
        for (int i = 0; i < a.size(); ++i) {
          h.map[i] = static_cast<Mask>(t % b.size());
          t /= b.size();
        }
        if (is_homomorphism(h)) ++found;
      }
      CHECK(found == enumerate_homs(a, b).size());
    }
}

TEST_CASE("generated subalgebras") {
  FiniteBA b3 = powerset_ba(3);
  Subalgebra s = subalgebra_generated(b3, Mask{1} << 0b011);
  CHECK(s.ba.atoms == 2);  // {0, m, -m, 1}
  CHECK(is_homomorphism(s.inclusion));

  Subalgebra trivial = subalgebra_generated(b3, 0);
  CHECK(trivial.ba.atoms == 1);

  Mask atoms = 0;
  for (int i = 0; i < 3; ++i) atoms |= Mask{1} << (Mask{1} << i);
  Subalgebra full = subalgebra_generated(b3, atoms);
  CHECK(full.ba.atoms == 3);
}

TEST_CASE("de morgan and distributivity on canonical form") {
  FiniteBA a = powerset_ba(3);
  for (Mask x = 0; x < static_cast<Mask>(a.size()); ++x)
    for (Mask y = 0; y < static_cast<Mask>(a.size()); ++y) {
      CHECK(a.complement(a.meet(x, y)) == a.join(a.complement(x), a.complement(y)));
      for (Mask z = 0; z < static_cast<Mask>(a.size()); ++z)
        CHECK(a.meet(x, a.join(y, z)) ==
              a.join(a.meet(x, y), a.meet(x, z)));
    }
}
