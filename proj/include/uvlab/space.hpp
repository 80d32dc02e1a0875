#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uvlab/balg.hpp"
#include "uvlab/lattice.hpp"
#include "uvlab/poset.hpp"

namespace uvlab {

// Finite T0 space, represented by its specialization poset; the topology is
// the Alexandroff upset topology (no information is lost at finite scale,
// and the identity int == int_le, cl == cl_le is checked, not assumed).
struct FiniteSpace {
  Poset order;

  int points() const { return order.n; }
  Mask carrier() const { return order.carrier(); }
  bool is_open(Mask u) const { return is_upset(order, u); }
};

struct SpaceMap {
  FiniteSpace dom, cod;
  std::vector<int> map;  // total on dom points

  int operator()(int x) const { return map[x]; }
  Mask image(Mask set) const;
  Mask preimage(Mask set) const;
};

// ---- set families ---------------------------------------------------------
//
// Each family is computed from its own definition; their collapse on finite
// UV-spaces is a theorem the verifier checks, never a shortcut taken here.

std::vector<Mask> open_sets(const FiniteSpace& x);
bool is_compact_subset(const FiniteSpace& x, Mask s);
std::vector<Mask> co(const FiniteSpace& x);    // compact open
std::vector<Mask> ro(const FiniteSpace& x);    // regular open in the space
std::vector<Mask> cro(const FiniteSpace& x);   // compact and space-regular-open
std::vector<Mask> oro(const FiniteSpace& x);   // open and order-regular-open
std::vector<Mask> coro(const FiniteSpace& x);  // compact open and order-regular-open

// Interior/closure of the space computed through the open-set family.
Mask space_int(const FiniteSpace& x, Mask s);
Mask space_cl(const FiniteSpace& x, Mask s);

// Pseudocomplement on opens: the union of all opens disjoint from u.
Mask star(const FiniteSpace& x, Mask u);  // NotOpen unless u is open

// int == int_le and cl == cl_le over every subset (the Alexandroff
// identity); exhaustive for small carriers.
bool verify_alexandroff(const FiniteSpace& x);

// ---- classifiers ----------------------------------------------------------

struct SpectralReport {
  bool compact = false, t0 = false, coherent_intersections = false,
       coherent_base = false, sober = false;
  std::vector<std::string> failures;
  bool ok() const {
    return compact && t0 && coherent_intersections && coherent_base && sober;
  }
};
SpectralReport is_spectral(const FiniteSpace& x);

struct UVReport {
  bool t0 = false, inter_closed = false, neg_closed = false, basis = false,
       filters_realized = false;
  std::vector<std::string> failures;
  bool ok() const {
    return t0 && inter_closed && neg_closed && basis && filters_realized;
  }
};
UVReport is_uv_space(const FiniteSpace& x);

// The CORO family as a Boolean algebra: meet is intersection, complement is
// int_le of the set complement, join is int_le(cl_le(union)).  sets[e] is
// the point set realizing element e.  NotUVSpace unless is_uv_space holds.
struct COROAlgebra {
  FiniteBA ba;
  std::vector<Mask> sets;

  // Element whose point set is `s`; UnknownElement if absent.
  Mask element_of(Mask s) const;
};
COROAlgebra coro_algebra(const FiniteSpace& x);

// Member CORO sets at a point, in canonical family order.
std::vector<Mask> coro_at(const FiniteSpace& x, int point);

// Greatest lower bound in the specialization order; total on UV-spaces.
int meet_point(const FiniteSpace& x, int a, int b);  // NoMeet, NotUVSpace

// The unique pair (p in U, q in neg U) with z = p meet q; NoWitness when no
// such pair exists (z inside U or neg U, or neg U empty).
std::pair<int, int> decompose(const FiniteSpace& x, Mask u, int z);

Mask join_coro(const FiniteSpace& x, Mask u, Mask v);
Mask join_via_meets(const FiniteSpace& x, Mask u, Mask v);

// CORO subspace; also checks CORO(subspace) == {V cap U | V in CORO(X)}.
struct SubspaceResult {
  FiniteSpace space;
  std::vector<int> to_parent;  // new point id -> old point id
};
SubspaceResult subspace(const FiniteSpace& x, Mask u);

Mask isolated_points(const FiniteSpace& x);
bool is_complete_uv(const FiniteSpace& x);

bool is_spectral_map(const SpaceMap& f);
bool is_uv_map(const SpaceMap& f);
bool is_uv_embedding(const SpaceMap& f);

bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

// The open-set lattice (used by the sobriety clause and the locale checks).
FiniteLattice open_set_lattice(const FiniteSpace& x,
                               std::vector<Mask>* opens_out = nullptr);

}  // namespace uvlab
