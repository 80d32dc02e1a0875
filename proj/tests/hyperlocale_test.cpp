#include <doctest.h>

#include "uvlab/errors.hpp"
#include "uvlab/hyperlocale.hpp"

using namespace uvlab;

TEST_CASE("discrete spaces") {
  CHECK(discrete_space(2).points() == 2);
  CHECK(discrete_space(1).points() == 1);
  CHECK(open_sets(discrete_space(3)).size() == 8);  // all subsets clopen
  CHECK_THROWS_AS(discrete_space(0), EmptySpace);
}

TEST_CASE("hyperspace of a finite Stone space") {
  Hyperspace h2 = uv_hyperspace(discrete_space(2));
  CHECK(h2.gen.space.points() == 3);
  CHECK(order_isomorphic(h2.gen.space.order,
                         validate_poset({{"x", "y1"}, {"x", "y2"}})));
  CHECK(uv_hyperspace(discrete_space(1)).gen.space.points() == 1);
  CHECK(uv_hyperspace(discrete_space(3)).gen.space.points() == 7);
  CHECK_THROWS_AS(
      uv_hyperspace(FiniteSpace{validate_poset({{"x", "y"}})}), NotStone);
}

TEST_CASE("hyperspace representation witnesses") {
  for (int n = 1; n <= 4; ++n) {
    HyperWitness w = check_hyperspace_representation(discrete_space(n));
    CHECK(w.ok);
    CHECK(homeomorphic(w.hyper.gen.space, w.dual.space));
  }
}

TEST_CASE("filter locales are Stone locales") {
  FilterLocale l2 = filt_locale(powerset_ba(2));
  CHECK(l2.lattice.n == 4);  // up(1), up(a), up(b), improper
  CHECK(is_stone_locale(l2.lattice));
  CHECK(filt_locale(powerset_ba(1)).lattice.n == 2);
  for (int k = 1; k <= 4; ++k)
    CHECK(is_stone_locale(filt_locale(powerset_ba(k)).lattice));
}

TEST_CASE("complemented elements recover the algebra") {
  for (int k = 1; k <= 4; ++k) {
    ComplementedElements z =
        complemented_elements(filt_locale(powerset_ba(k)).lattice);
    CHECK(z.ba.atoms == k);
  }
  // the two-element lattice
  FiniteLattice two = lattice_from_order(2, {1, 1, 0, 1});
  CHECK(complemented_elements(two).ba.atoms == 1);
}

TEST_CASE("the diamond is flagged non-boolean") {
  // 0 < a,b,c < 1: every middle element is complemented twice over
  int n = 5;
  std::vector<char> leq(n * n, 0);
  auto set = [&](int i, int j) { leq[i * n + j] = 1; };
  for (int i = 0; i < n; ++i) set(i, i);
  for (int m : {1, 2, 3}) {
    set(0, m);
    set(m, 4);
  }
  set(0, 4);
  FiniteLattice m3 = lattice_from_order(n, leq);
  CHECK(!is_distributive(m3));
  CHECK_THROWS_AS(complemented_elements(m3), NotBoolean);
  CHECK_THROWS_AS(upper_vietoris_of_locale(m3), NotStoneLocale);
}

TEST_CASE("upper Vietoris space of a filter locale") {
  GeneratedSpace s2 = upper_vietoris_of_locale(
      filt_locale(powerset_ba(2)).lattice);
  CHECK(s2.space.points() == 3);
  CHECK(order_isomorphic(s2.space.order,
                         validate_poset({{"x", "y1"}, {"x", "y2"}})));
  CHECK(upper_vietoris_of_locale(filt_locale(powerset_ba(1)).lattice)
            .space.points() == 1);
  CHECK(upper_vietoris_of_locale(filt_locale(powerset_ba(3)).lattice)
            .space.points() == 7);
}

TEST_CASE("the two generating families give one topology") {
  for (int k = 1; k <= 4; ++k) CHECK(check_same_topologies(powerset_ba(k)));
}

TEST_CASE("UV axioms match the locale characterization") {
  CHECK(check_uv_iff_locale(
      FiniteSpace{validate_poset({{"x", "y1"}, {"x", "y2"}})}));
  CHECK(!check_uv_iff_locale(FiniteSpace{validate_poset({{"x", "y"}})}));
  CHECK(check_uv_iff_locale(FiniteSpace{validate_poset({"p"}, {})}));
}
