#pragma once

#include <vector>

#include "uvlab/dictionary.hpp"
#include "uvlab/duality.hpp"

namespace uvlab {

// Pairwise disjoint nonempty CORO sets whose algebra join is the whole
// space (validated on construction).
struct RegularPartition {
  std::vector<Mask> blocks;
};

// Strictly descending CORO chain U0 ) U1 ) ... with a point of U_i in
// neg U_{i+1} at each step.  Deterministic: each step keeps the largest
// candidate (first in canonical family order among ties).  TooLong when
// len exceeds the atom count.
std::vector<Mask> find_chain(const FiniteSpace& x, int len);

// Pairwise disjoint CORO sets U_i cap neg U_{i+1}, the last block closing
// with the empty set.
std::vector<Mask> find_antichain(const FiniteSpace& x, int len);

// n+1 blocks built from a descending chain; needs atom count >= n+1.
RegularPartition regular_partition(const FiniteSpace& x, int n);

void validate_partition(const FiniteSpace& x, const RegularPartition& part);

// The unique minimal index set K with x in the join over K but in no join
// over a proper subset; computed by the closed form
// {i | up(x) meets U_i} and re-verified against the defining property.
Mask signature(const FiniteSpace& x, const RegularPartition& part, int point);
Mask signature(const FiniteSpace& x, const RegularPartition& part, int point,
               const COROAlgebra& cx);

// Surjective UV-map onto the dual of the n-atom algebra built from an
// n-block partition by signatures, together with the dual embedding.
struct EmbedResult {
  RegularPartition partition;
  DualSpace target;  // dual of the n-atom algebra
  SpaceMap onto;     // x -> target.space, surjective UV-map
  BAHom embedding;   // coro(target) -> coro(x), injective
};
EmbedResult embed_bn(const FiniteSpace& x, int n);

// Splits a complete UV-space along int cl of its isolated points into an
// atomic part (isolated points dense) and an atomless part (no isolated
// points).  At finite scale the atomless part is always empty, flagged as
// a trivial split.
struct CompleteSplit {
  Mask dense_part = 0;  // int cl of the isolated points
  bool trivial = false;
  SubspaceResult atomic_part;
  SubspaceResult atomless_part;
};
CompleteSplit split_complete(const FiniteSpace& x);

}  // namespace uvlab
