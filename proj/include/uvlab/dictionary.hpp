#pragma once

#include <string>
#include <vector>

#include "uvlab/duality.hpp"

namespace uvlab {

// One translation row: a census on each side and a verified bijection (or
// isomorphism/homeomorphism, as the row requires).
struct DictReport {
  std::string row;
  int left_census = 0;
  int right_census = 0;
  bool pass = false;
  std::string detail;
};

// Filter translation: intersection of the hat sets; always the principal
// upset of the filter's point, order-reversing.
Mask eta(const DualSpace& d, const BAFilter& f);  // ImproperFilter

// Ideal translation: union of the hat sets; lands in ORO(X) and the map
// U -> {a | hat(a) included in U} inverts it.
Mask zeta(const DualSpace& d, const BAIdeal& ideal);  // NotAnIdeal

// Maximal filters <-> singletons of maximal points; maximal ideals <->
// complements of point downsets; censuses equal the atom count.
DictReport maximal_rows(const DualSpace& d);

// Relativizing the algebra to U is dual to the CORO subspace.
DictReport relativization_row(const FiniteSpace& x, Mask u);

// Meets as int of intersections, joins as int cl of unions, evaluated
// against the algebra side through the representation; completeness holds
// on both sides at finite scale.
DictReport meet_join_formulas(const FiniteSpace& x,
                              const std::vector<Mask>& family);
// Batch form for exhaustive sweeps: the algebra and the open-set family
// are computed once by the caller; the completeness clause is then also
// the caller's, once per space.
DictReport meet_join_formulas(const FiniteSpace& x,
                              const std::vector<Mask>& family,
                              const COROAlgebra& cx,
                              const std::vector<Mask>& opens);

// Atoms <-> isolated points; atomicity <-> density of isolated points.
DictReport atoms_row(const FiniteSpace& x);

// UV-sum: carrier X + Y + X*Y with the topology generated by
// U u V u (U x V) over CORO pairs.  The specialization order is computed
// from the generators and checked against the five-clause description.
struct UVSum {
  FiniteSpace space;
  int nx = 0, ny = 0;

  int left_id(int x) const { return x; }
  int right_id(int y) const { return nx + y; }
  int pair_id(int x, int y) const { return nx + ny + x * ny + y; }
};
UVSum uv_sum(const FiniteSpace& x, const FiniteSpace& y);

// The UV-sum of the duals is homeomorphic to the dual of the product, via
// the case-split comparison map on filters.
DictReport check_sum_product(const FiniteBA& a, const FiniteBA& b);

// Splitting along U: X is homeomorphic to subspace(U) + subspace(neg U),
// pairs going to meets.  TrivialSplit when either side is empty.
struct SplitWitness {
  SubspaceResult inside, outside;
  UVSum sum;
  std::vector<int> map;  // sum point -> X point
  bool ok = false;
};
SplitWitness split_by_coro(const FiniteSpace& x, Mask u);

// The full algebra of regular open upsets of the specialization order;
// coincides with the CORO algebra at finite scale (asserted).
FiniteBA canonical_extension(const FiniteSpace& x);

// Normal ideals <-> space-regular-opens through the maps
// r(I) = union of hats over I and i(V) = lower bounds of
// {-b | hat(b) included in star(V)}; r and i are mutually inverse and the
// image of r is exactly RO(X).
DictReport macneille(const FiniteSpace& x);

}  // namespace uvlab
