#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uvlab/masks.hpp"

namespace uvlab {

// Finite poset.  Elements are ids 0..n-1; iteration order is always id
// order.  The relation is stored as successor rows: up[x] = {y | x <= y}.
struct Poset {
  int n = 0;
  std::vector<std::string> labels;  // id -> display name
  std::vector<Mask> up;             // reflexive-transitive, antisymmetric

  Mask carrier() const { return full_mask(n); }
  bool leq(int x, int y) const { return mask_has(up[x], y); }

  // Sweep-generated posets may omit labels; fall back to positional names.
  std::string label(int i) const {
    return labels.empty() ? "p" + std::to_string(i) : labels[i];
  }

  Mask up_of(Mask set) const;    // union of up[x] over x in set
  Mask down_of(Mask set) const;  // {x | up[x] meets set}
  Mask down_row(int x) const;    // {y | y <= x}

  Mask maximal_elements() const;
  Mask minimal_elements() const;
  // Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  int id_of(const std::string& label) const;  // UnknownElement if absent

  // Induced restriction to the elements of `set`, relabeled in id order.
  // Second component maps new ids to old ids.
  std::pair<Poset, std::vector<int>> restrict(Mask set) const;
};

// Builds a poset from an arbitrary relation given as label pairs: the
// reflexive-transitive closure is taken, so covers alone are accepted.
// Ids are assigned to `elements` in order, then to names first appearing in
// `pairs`.  Throws CycleError if the closure is not antisymmetric and
// DuplicateLabelError on repeated names in `elements`.
Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>&
                         pairs);
Poset validate_poset(
    const std::vector<std::pair<std::string, std::string>>& pairs);

// Construction from successor rows (already reflexive-transitive-
// antisymmetric; validated).
Poset poset_from_up_rows(std::vector<Mask> up,
                         std::vector<std::string> labels = {});

// ---- Upset-topology operators ------------------------------------------
//
// All subsets are masks over the poset's carrier.  cl_le / int_le / neg_le
// are the closure, interior and pseudocomplement in the upset topology;
// a set is a regular open upset iff it is an upset equal to
// int_le(cl_le(.)), equivalently equal to neg_le(neg_le(.)).

Mask up_set(const Poset& p, int x);  // principal upset; UnknownElement
Mask cl_le(const Poset& p, Mask u);
Mask int_le(const Poset& p, Mask u);
Mask neg_le(const Poset& p, Mask u);
bool is_upset(const Poset& p, Mask u);
bool is_ro_upset(const Poset& p, Mask u);

// All upsets in canonical order.  Narrow carriers go through the kernel
// sweep over all 2^n candidates; wider ones use an output-sensitive DFS.
std::vector<Mask> all_upsets(const Poset& p);

// All regular open upsets in canonical order (size, then lexicographic on
// sorted id lists).  SizeLimit when the family is impractically large.
std::vector<Mask> all_ro_upsets(const Poset& p);

// Sorts a set family into the canonical order.
void sort_family(std::vector<Mask>& family);
bool family_less(Mask a, Mask b);

// Separativity: every principal upset is a regular open upset.  Also
// evaluates the first-order characterization (x !<= y implies some
// z >= y has up(z) disjoint from up(x)) and asserts the two agree.
bool is_separative(const Poset& p);

// Greatest lower bound of {x, y} if it exists.
std::optional<int> poset_meet(const Poset& p, int x, int y);

// ---- Isomorphism --------------------------------------------------------

// Canonical relabeling key: the lexicographically least up-row encoding
// over all permutations, pruned by degree/level invariants.  Two posets are
// isomorphic iff their keys are equal.
std::vector<Mask> canonical_key(const Poset& p);

// Witness maps ids of `a` to ids of `b`.
std::optional<std::vector<int>> find_order_iso(const Poset& a,
                                               const Poset& b);
bool order_isomorphic(const Poset& a, const Poset& b);

// ---- Fault injection (testing hook) -------------------------------------
//
// Verifier self-test: corrupting neg_le must make the representation
// theorem fail with a replayable counterexample.
namespace testing {
enum class Fault { None, CorruptNeg };
void set_fault(Fault f);
Fault fault();
}  // namespace testing

}  // namespace uvlab
