#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uvlab/masks.hpp"
#include "uvlab/poset.hpp"

namespace uvlab {

// Finite Boolean algebra in canonical atom form.  An element is the mask of
// atoms below it, so the element ids 0..2^k-1 are the elements themselves:
// meet/join/complement are bitwise and/or/not over the atom set.
struct FiniteBA {
  int atoms = 0;
  std::vector<std::string> atom_labels;  // optional; size == atoms when set
  // Optional back-reference for algebras carved out of a set family
  // (regular open upsets of a poset, CORO sets of a space): element_sets[e]
  // is the point set realizing element e, and origin says where it lives.
  std::string origin;
  std::vector<Mask> element_sets;

  int size() const { return 1 << atoms; }
  bool degenerate() const { return atoms == 0; }
  Mask one() const { return full_mask(atoms); }
  Mask meet(Mask a, Mask b) const { return a & b; }
  Mask join(Mask a, Mask b) const { return a | b; }
  Mask complement(Mask a) const { return one() & ~a; }
  bool leq(Mask a, Mask b) const { return mask_subset(a, b); }
  bool is_atom(Mask a) const { return mask_size(a) == 1; }
  void check_element(Mask a) const;  // UnknownElement if a is not an element

  std::string element_name(Mask a) const;
};

// Filters and ideals are bitsets over element ids (usable while the algebra
// has at most 6 atoms, i.e. 64 elements).
struct BAFilter {
  Mask elems = 0;
  bool contains(Mask element) const { return mask_has(elems, (int)element); }
  // Least member; filters of a finite BA are meet-closed so this generates.
  Mask generator() const;
};

struct BAIdeal {
  Mask elems = 0;
  bool contains(Mask element) const { return mask_has(elems, (int)element); }
  Mask generator() const;  // greatest member
};

struct BAHom {
  FiniteBA dom, cod;
  std::vector<Mask> map;  // map[a] for every element a of dom

  Mask operator()(Mask a) const { return map[a]; }
};

// Canonical k-atom algebra.  SizeLimit beyond the configured atom bound.
FiniteBA powerset_ba(int k);

// Validation of an arbitrary multiplication-table presentation: every BA
// axiom is checked by exhaustion (AxiomViolation carries the axiom name and
// a witness), atoms are located, and the algebra is re-coordinatized.
// renaming[old_id] is the canonical element for the table's element old_id.
struct TableValidation {
  FiniteBA ba;
  std::vector<Mask> renaming;
};
TableValidation ba_from_tables(int carrier,
                               const std::vector<std::vector<int>>& meet,
                               const std::vector<std::vector<int>>& join,
                               const std::vector<int>& neg, int zero,
                               int one);

// All proper filters, brute-forced over the upward-closed meet-closed
// subsets of the nonzero elements; canonical deterministic order.
std::vector<BAFilter> enumerate_proper_filters(const FiniteBA& a);
// Independent shortcut {up(a) | a != 0} used as the other half of the
// oracle pair.
std::vector<BAFilter> principal_proper_filters(const FiniteBA& a);

// Least filter containing `seed` (a bitset over element ids); nullopt when
// the generated filter is improper.
std::optional<BAFilter> filter_generated(const FiniteBA& a, Mask seed_elems);

// All ideals, including {0} and the unit ideal; brute-forced and checked
// against the principal enumeration {down(a)}.
std::vector<BAIdeal> enumerate_ideals(const FiniteBA& a);

bool is_normal_ideal(const FiniteBA& a, const BAIdeal& ideal);

// Upper bounds / lower bounds of a set of elements.
Mask upper_bounds(const FiniteBA& a, Mask elems);
Mask lower_bounds(const FiniteBA& a, Mask elems);

bool is_filter(const FiniteBA& a, Mask elems, bool require_proper);
bool is_ideal(const FiniteBA& a, Mask elems);
bool is_maximal_filter(const FiniteBA& a, const BAFilter& f);
bool is_maximal_ideal(const FiniteBA& a, const BAIdeal& ideal);

// Componentwise product; atoms of `a` come first.
FiniteBA product_ba(const FiniteBA& a, const FiniteBA& b);
Mask product_elem(const FiniteBA& a, const FiniteBA& b, Mask ea, Mask eb);
std::pair<Mask, Mask> product_split(const FiniteBA& a, const FiniteBA& b,
                                    Mask e);

// Algebra on {b | b <= rel_to} with complement c -> rel_to and-not c.
// to_parent maps canonical elements of the result into `a`.
struct Relativization {
  FiniteBA ba;
  std::vector<Mask> to_parent;
};
Relativization relativize(const FiniteBA& a, Mask rel_to);

bool is_homomorphism(const BAHom& h);
bool is_injective(const BAHom& h);
bool is_surjective(const BAHom& h);

BAHom identity_hom(const FiniteBA& a);
BAHom compose_hom(const BAHom& later, const BAHom& earlier);

// All homomorphisms dom -> cod, generated from the functions
// atoms(cod) -> atoms(dom) and re-verified elementwise.
std::vector<BAHom> enumerate_homs(const FiniteBA& dom, const FiniteBA& cod);

// Closure of `seed` (bitset over element ids) under meet and complement,
// with the inclusion into `a`.
struct Subalgebra {
  FiniteBA ba;
  std::vector<Mask> to_parent;  // element of ba -> element of a
  BAHom inclusion;
};
Subalgebra subalgebra_generated(const FiniteBA& a, Mask seed_elems);

// Tarski's algebra of the regular open upsets of a poset, with meet as
// intersection, complement as neg, join as int cl of unions.  The family's
// operation tables go through the table validator, so every algebra axiom
// is re-checked; violations (possible only under fault injection) surface
// as counterexamples.
struct ROAlgebra {
  FiniteBA ba;
  std::vector<Mask> sets;  // element -> point set
};
ROAlgebra ro_algebra(const Poset& p);

}  // namespace uvlab
