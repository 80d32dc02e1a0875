#pragma once

#include <string>
#include <vector>

#include "uvlab/masks.hpp"

namespace uvlab {

// Finite bounded lattice with explicit meet/join tables.  Sizes stay small
// (open-set lattices of desk-scale spaces, filter lattices of small BAs),
// so quadratic tables are fine.
struct FiniteLattice {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<char> leq;        // n*n, row-major: leq[a*n+b] iff a <= b
  std::vector<int> meet, join;  // n*n tables
  int bottom = 0, top = 0;

  bool leq_at(int a, int b) const { return leq[a * n + b] != 0; }
  int meet_at(int a, int b) const { return meet[a * n + b]; }
  int join_at(int a, int b) const { return join[a * n + b]; }

  int meet_all(const std::vector<int>& xs) const;  // empty -> top
  int join_all(const std::vector<int>& xs) const;  // empty -> bottom
};

// Builds the lattice from a partial order, computing meet/join tables;
// throws NotBoolean-agnostic SchemaError if some pair lacks a meet or join.
FiniteLattice lattice_from_order(int n,
                                 const std::vector<char>& leq,
                                 std::vector<std::string> labels = {});

// Finite distributivity; with completeness trivial at finite scale, this is
// the frame (join-infinite distributive) law.
bool is_distributive(const FiniteLattice& l);

// Compactness of the finite lattice read as a locale: any subset joining to
// top has a finite subjoin to top.  Trivially true finitely; evaluated
// literally on the join-irreducible decomposition.
bool is_compact_locale(const FiniteLattice& l);

// Elements a with some b such that a^b=0 and avb=1.
std::vector<int> complemented_elements_of(const FiniteLattice& l);

// Every element is a join of complemented elements.
bool is_zero_dimensional(const FiniteLattice& l);

bool is_stone_locale(const FiniteLattice& l);

// Generators of the completely prime filters: every completely prime
// filter of a finite lattice is the principal upset of a join-irreducible
// non-bottom element.  (Cross-checked against the literal definition by the
// tests at tiny scale.)
std::vector<int> completely_prime_generators(const FiniteLattice& l);

// Literal check that up(x) is a completely prime filter: proper, upward
// closed, meet closed, and V of any subset landing in the filter forces a
// member in it (binary + empty joins suffice finitely).
bool is_completely_prime_upset(const FiniteLattice& l, int x);

}  // namespace uvlab
