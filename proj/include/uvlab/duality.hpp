#pragma once

#include <string>
#include <vector>

#include "uvlab/balg.hpp"
#include "uvlab/space.hpp"

namespace uvlab {

// Dual space of a Boolean algebra: points are the proper filters with the
// topology generated by the sets hat(a); the specialization order is filter
// inclusion.  Each point keeps its filter meaning.
struct DualSpace {
  FiniteSpace space;
  FiniteBA algebra;
  std::vector<Mask> point_filters;  // point -> bitset over algebra elements

  int point_of_filter(Mask filter_elems) const;  // UnknownElement if absent
};

// Builds the dual space, asserting spectrality, the UV axioms and agreement
// with the finite shortcut (nonzero elements under reversed order).
DualSpace uv_dual(const FiniteBA& a);

// Points whose filter contains the element.
Mask hat(const DualSpace& d, Mask element);

// Representation: hat is an isomorphism onto the CORO family of the dual,
// and meet/complement/join translate to intersection, neg, int cl of union.
// Violations raise CounterexampleError with a replayable payload.
struct RepresentationReport {
  int atoms = 0;
  std::vector<Mask> iso;  // element -> point set (the hat map)
  bool ok = false;
};
RepresentationReport check_representation(const FiniteBA& a);

// The homeomorphism x -> CORO(x) from a UV-space onto the dual of its CORO
// algebra (both directions verified).
struct EpsilonResult {
  DualSpace dual;
  SpaceMap map;  // from x to dual.space
};
EpsilonResult epsilon(const FiniteSpace& x);

// Contravariant functor, algebra side: a homomorphism h : A -> B induces
// the UV-map F -> preimage of F under h from the dual of B to the dual of A.
struct DualHomResult {
  DualSpace dom_dual;  // dual of h.dom
  DualSpace cod_dual;  // dual of h.cod
  SpaceMap map;        // cod_dual.space -> dom_dual.space
};
DualHomResult dual_hom(const BAHom& h);

// Contravariant functor, space side: a UV-map f : X -> Y induces the
// homomorphism V -> preimage of V from CORO(Y) to CORO(X).
BAHom dual_map(const SpaceMap& f);

// Commuting squares of the dual equivalence.
bool check_squares(const BAHom& h);
bool check_squares_space(const SpaceMap& f);

struct InjSurjReport {
  bool h_injective = false, dual_surjective_checked = false;
  bool h_surjective = false, dual_embedding_checked = false;
  bool map_surjective = false, dual_injective_checked = false;
  bool map_embedding = false, dual_surjective2_checked = false;
  bool ok = false;
};
InjSurjReport check_injective_surjective_duality(const BAHom& h);

}  // namespace uvlab
