#pragma once

#include <string>
#include <vector>

#include "uvlab/balg.hpp"
#include "uvlab/duality.hpp"
#include "uvlab/lattice.hpp"
#include "uvlab/space.hpp"

namespace uvlab {

// Finite Stone space: an antichain (discrete) space.  EmptySpace if n < 1.
FiniteSpace discrete_space(int n);

// A space together with the family that generated its topology.
struct GeneratedSpace {
  FiniteSpace space;
  std::vector<Mask> generators;  // point sets
  std::vector<std::string> generator_labels;
};

// Hyperspace of nonempty closed sets of a finite Stone space under the
// topology generated by box(U) = {F | F included in U}, U clopen.  Points
// are the nonempty subsets in canonical (size, lexicographic) order;
// point_sets names them.  The specialization order is computed from the
// generators and checked against reverse inclusion.
struct Hyperspace {
  GeneratedSpace gen;
  std::vector<Mask> point_sets;  // point id -> closed subset of the base
};
Hyperspace uv_hyperspace(const FiniteSpace& stone);

// The clopen algebra of a finite Stone space (the powerset algebra with
// atoms named after points).
FiniteBA clop_algebra(const FiniteSpace& stone);

// Homeomorphism witness between the hyperspace and the dual of the clopen
// algebra: C -> {U clopen | C included in U}, verified as a bijection whose
// basic-open identities hold in both directions.
struct HyperWitness {
  Hyperspace hyper;
  DualSpace dual;
  std::vector<int> map;  // hyperspace point -> dual point
  bool ok = false;
};
HyperWitness check_hyperspace_representation(const FiniteSpace& stone);

// The lattice of all filters (improper included), ordered by inclusion;
// meet is intersection, join is the generated filter.  A Stone locale.
struct FilterLocale {
  FiniteLattice lattice;
  std::vector<Mask> filter_elems;  // lattice element -> filter's elements
  int improper;                    // index of the top
};
FilterLocale filt_locale(const FiniteBA& a);

// The algebra of complemented elements of a bounded lattice; NotBoolean if
// they fail closure or the algebra axioms (a non-Stone-locale input).
struct ComplementedElements {
  FiniteBA ba;
  std::vector<int> to_lattice;  // canonical element -> lattice element
};
ComplementedElements complemented_elements(const FiniteLattice& l);

// Points are the non-top elements; topology generated by
// blacksquare(x) = {y != top | x v y = top}.  NotStoneLocale when the
// input fails the Stone-locale axioms.
GeneratedSpace upper_vietoris_of_locale(const FiniteLattice& l);

// The topologies generated on the proper filters by the blacksquare sets
// and by the hat sets must be the same family; also checks the pointwise
// translation identities between the two generator families.
bool check_same_topologies(const FiniteBA& a);

// A space is UV iff it is homeomorphic to the upper Vietoris space of some
// Stone locale; the search runs over filter locales of small algebras.
bool check_uv_iff_locale(const FiniteSpace& x);

}  // namespace uvlab
