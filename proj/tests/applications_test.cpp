#include <doctest.h>

#include "uvlab/applications.hpp"
#include "uvlab/errors.hpp"

using namespace uvlab;

namespace {

FiniteSpace dual_space(int k) { return uv_dual(powerset_ba(k)).space; }

}  // namespace

TEST_CASE("descending chains") {
  FiniteSpace x3 = dual_space(3);
  std::vector<Mask> chain = find_chain(x3, 3);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == x3.carrier());
  for (int i = 0; i + 1 < 3; ++i) {
    CHECK(mask_subset(chain[i + 1], chain[i]));
    CHECK(chain[i + 1] != chain[i]);
    CHECK((chain[i] & neg_le(x3.order, chain[i + 1])) != 0);
  }
  CHECK(find_chain(x3, 1) == std::vector<Mask>{x3.carrier()});
  CHECK_THROWS_AS(find_chain(dual_space(2), 4), TooLong);
}

TEST_CASE("antichains split the chain") {
  FiniteSpace x3 = dual_space(3);
  std::vector<Mask> anti = find_antichain(x3, 3);
  REQUIRE(anti.size() == 3);
  for (std::size_t i = 0; i < anti.size(); ++i) {
    CHECK(anti[i] != 0);
    for (std::size_t j = i + 1; j < anti.size(); ++j)
      CHECK((anti[i] & anti[j]) == 0);
  }
}

TEST_CASE("regular partitions") {
  FiniteSpace x3 = dual_space(3);
  RegularPartition p = regular_partition(x3, 1);
  CHECK(p.blocks.size() == 2);
  validate_partition(x3, p);

  RegularPartition whole = regular_partition(x3, 0);
  CHECK(whole.blocks == std::vector<Mask>{x3.carrier()});

  CHECK_THROWS_AS(regular_partition(dual_space(2), 3), TooManyBlocks);
}

TEST_CASE("signatures on the fork") {
  FiniteSpace pv = dual_space(2);
  COROAlgebra c = coro_algebra(pv);
  RegularPartition p{{c.sets[0b01], c.sets[0b10]}};
  validate_partition(pv, p);
  // the root sees both blocks; each maximal point sees its own
  int root = mask_min(pv.order.minimal_elements());
  CHECK(signature(pv, p, root) == 0b11);
  for (int q : mask_elems(pv.order.maximal_elements()))
    CHECK(mask_size(signature(pv, p, q)) == 1);
}

TEST_CASE("signatures are unique and realized on small duals") {
  for (int k = 1; k <= 3; ++k) {
    FiniteSpace x = dual_space(k);
    COROAlgebra c = coro_algebra(x);
    // the finest partition: one block per atom
    RegularPartition part;
    for (int i = 0; i < k; ++i) part.blocks.push_back(c.sets[Mask{1} << i]);
    validate_partition(x, part);
    std::vector<char> realized(std::size_t{1} << k, 0);
    for (int p = 0; p < x.points(); ++p) realized[signature(x, part, p)] = 1;
    for (Mask s = 1; s < (Mask{1} << k); ++s) CHECK(realized[s] == 1);
  }
}

TEST_CASE("embedding small algebras via signature maps") {
  FiniteSpace x3 = dual_space(3);
  EmbedResult e = embed_bn(x3, 2);
  CHECK(e.target.space.points() == 3);
  CHECK(is_uv_map(e.onto));
  CHECK(is_injective(e.embedding));

  EmbedResult trivial = embed_bn(x3, 1);
  CHECK(trivial.target.space.points() == 1);

  // full rank: the map is a homeomorphism
  EmbedResult full = embed_bn(x3, 3);
  CHECK(homeomorphic(x3, full.target.space));

  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= k; ++n) {
      EmbedResult r = embed_bn(dual_space(k), n);
      CHECK(r.embedding.cod.atoms == k);
      CHECK(r.target.algebra.atoms == n);
    }
}

TEST_CASE("complete splits are atomic at finite scale") {
  for (int k = 1; k <= 4; ++k) {
    CompleteSplit s = split_complete(dual_space(k));
    CHECK(s.trivial);
    CHECK(s.dense_part == dual_space(k).carrier());
    CHECK(s.atomless_part.space.points() == 0);
    CHECK(s.atomic_part.space.points() == dual_space(k).points());
  }
  CHECK_THROWS_AS(split_complete(FiniteSpace{validate_poset({{"x", "y"}})}),
                  NotUVSpace);
}
