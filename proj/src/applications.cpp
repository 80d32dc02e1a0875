#include "uvlab/applications.hpp"

#include <algorithm>

#include "uvlab/errors.hpp"

namespace uvlab {

std::vector<Mask> find_chain(const FiniteSpace& x, int len) {
  if (len < 1) throw SchemaError("chain length must be positive");
  COROAlgebra cx = coro_algebra(x);  // NotUVSpace when the axioms fail
  if (len > cx.ba.atoms)
    throw TooLong("chain length " + std::to_string(len) +
                  " exceeds the atom count " + std::to_string(cx.ba.atoms));
  std::vector<Mask> family = coro(x);

  std::vector<Mask> chain{x.carrier()};
  while (static_cast<int>(chain.size()) < len) {
    Mask cur = chain.back();
    // Candidates: strictly smaller CORO sets leaving a witness point in
    // cur cap neg(candidate).  Keep the largest; ties go to the first in
    // canonical family order.
    bool found = false;
    Mask best = 0;
    int best_size = -1;
    for (Mask cand : family) {
      if (cand == cur || !mask_subset(cand, cur)) continue;
      if ((cur & neg_le(x.order, cand)) == 0) continue;
      if (mask_size(cand) > best_size) {
        best = cand;
        best_size = mask_size(cand);
        found = true;
      }
    }
    if (!found)
      throw TooLong("chain cannot be extended further");
    chain.push_back(best);
  }
  return chain;
}

std::vector<Mask> find_antichain(const FiniteSpace& x, int len) {
  std::vector<Mask> chain = find_chain(x, len);
  chain.push_back(0);  // closing device: one empty set past the end
  std::vector<Mask> blocks;
  for (int i = 0; i < len; ++i)
    blocks.push_back(chain[i] & neg_le(x.order, chain[i + 1]));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i] & blocks[j])
        throw CounterexampleError("antichain blocks overlap",
                                  R"({"theorem":"antichain"})");
  return blocks;
}

void validate_partition(const FiniteSpace& x, const RegularPartition& part) {
  std::vector<Mask> family = coro(x);
  Mask join_acc = 0;
  bool first = true;
  for (Mask b : part.blocks) {
    if (b == 0)
      throw CounterexampleError("partition block is empty",
                                R"({"theorem":"partition"})");
    if (std::find(family.begin(), family.end(), b) == family.end())
      throw NotCORO("partition block is not CORO");
    if (first) {
      join_acc = b;
      first = false;
    } else {
      join_acc = join_coro(x, join_acc, b);  // checks both join formulas
    }
  }
  for (std::size_t i = 0; i < part.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < part.blocks.size(); ++j)
      if (part.blocks[i] & part.blocks[j])
        throw CounterexampleError("partition blocks overlap",
                                  R"({"theorem":"partition"})");
  if (join_acc != x.carrier())
    throw CounterexampleError("partition does not join to the whole space",
                              R"({"theorem":"partition"})");
  // Each block also avoids int cl of the union of the others.
  for (std::size_t i = 0; i < part.blocks.size(); ++i) {
    Mask rest = 0;
    for (std::size_t j = 0; j < part.blocks.size(); ++j)
      if (j != i) rest |= part.blocks[j];
    if (part.blocks[i] & int_le(x.order, cl_le(x.order, rest)))
      throw CounterexampleError(
          "partition block meets int cl of the other blocks",
          R"({"theorem":"partition"})");
  }
}

RegularPartition regular_partition(const FiniteSpace& x, int n) {
  if (n < 0) throw SchemaError("block count must be nonnegative");
  COROAlgebra cx = coro_algebra(x);
  if (cx.ba.atoms < n + 1)
    throw TooManyBlocks("need atom count at least " + std::to_string(n + 1));
  RegularPartition part{find_antichain(x, n + 1)};
  validate_partition(x, part);
  return part;
}

Mask signature(const FiniteSpace& x, const RegularPartition& part,
               int point) {
  return signature(x, part, point, coro_algebra(x));
}

Mask signature(const FiniteSpace& x, const RegularPartition& part, int point,
               const COROAlgebra& cx) {
  if (point < 0 || point >= x.points())
    throw UnknownElement("point id out of range");
  int m = static_cast<int>(part.blocks.size());

  Mask closed_form = 0;
  for (int i = 0; i < m; ++i)
    if (x.order.up[point] & part.blocks[i]) closed_form |= Mask{1} << i;

  // The defining property, evaluated on every index set.
  auto join_set = [&](Mask idx) {
    Mask e = 0;
    for (int i : mask_elems(idx)) e = cx.ba.join(e, cx.element_of(part.blocks[i]));
    return cx.sets[e];
  };
  auto satisfies = [&](Mask k) {
    if (!mask_has(join_set(k), point)) return false;
    for (int i : mask_elems(k))
      if (mask_has(join_set(k & ~(Mask{1} << i)), point)) return false;
    return true;
  };
  Mask found = 0;
  int count = 0;
  for (Mask k = 0; k < (Mask{1} << m); ++k)
    if (satisfies(k)) {
      found = k;
      ++count;
    }
  if (count != 1 || found != closed_form)
    throw CounterexampleError(
        "signature closed form disagrees with the defining property",
        R"({"theorem":"signature"})");
  return closed_form;
}

EmbedResult embed_bn(const FiniteSpace& x, int n) {
  if (n < 1) throw SchemaError("target atom count must be positive");
  COROAlgebra cx = coro_algebra(x);
  if (cx.ba.atoms < n)
    throw TooManyBlocks("need atom count at least " + std::to_string(n));

  EmbedResult out{regular_partition(x, n - 1), uv_dual(powerset_ba(n)),
                  SpaceMap{}, BAHom{}};

  // A signature K names the point of the target carrying the filter of
  // the join of the atoms indexed by K.
  out.onto.dom = x;
  out.onto.cod = out.target.space;
  out.onto.map.resize(x.points());
  for (int p = 0; p < x.points(); ++p) {
    Mask k = signature(x, out.partition, p, cx);
    auto f = filter_generated(out.target.algebra, Mask{1} << k);
    out.onto.map[p] = out.target.point_of_filter(f->elems);
  }

  std::vector<char> seen(out.target.space.points(), 0);
  for (int v : out.onto.map) seen[v] = 1;
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
    throw CounterexampleError("signature map is not surjective",
                              R"({"theorem":"embed"})");
  if (!is_uv_map(out.onto))
    throw CounterexampleError("signature map is not a UV-map",
                              R"({"theorem":"embed"})");

  out.embedding = dual_map(out.onto);
  if (!is_injective(out.embedding))
    throw CounterexampleError("dual of the signature map is not injective",
                              R"({"theorem":"embed"})");
  Mask image_elems = 0;
  for (Mask v : out.embedding.map) image_elems |= Mask{1} << v;
  Subalgebra img = subalgebra_generated(out.embedding.cod, image_elems);
  if (img.ba.atoms != n)
    throw CounterexampleError("image subalgebra has the wrong atom count",
                              R"({"theorem":"embed"})");
  return out;
}

CompleteSplit split_complete(const FiniteSpace& x) {
  if (!is_uv_space(x).ok()) throw NotUVSpace("split needs a UV-space");
  if (!is_complete_uv(x))
    throw NotUVSpace("split needs a complete UV-space");

  CompleteSplit out;
  Mask iso = isolated_points(x);
  out.dense_part = space_int(x, space_cl(x, iso));

  Mask rest = neg_le(x.order, out.dense_part);
  out.atomic_part = subspace(x, out.dense_part);
  out.atomless_part = subspace(x, rest);
  if (out.dense_part == 0 || rest == 0) {
    out.trivial = true;
  } else {
    split_by_coro(x, out.dense_part);  // homeomorphism witness
  }

  if (isolated_points(out.atomless_part.space) != 0)
    throw CounterexampleError("atomless part has an isolated point",
                              R"({"theorem":"complete-split"})");
  const FiniteSpace& u = out.atomic_part.space;
  if (u.points() > 0 &&
      space_cl(u, isolated_points(u)) != u.carrier())
    throw CounterexampleError(
        "isolated points are not dense in the atomic part",
        R"({"theorem":"complete-split"})");
  return out;
}

}  // namespace uvlab
