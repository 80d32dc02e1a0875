#include "uvlab/lattice.hpp"

#include <algorithm>

#include "uvlab/errors.hpp"

namespace uvlab {

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int acc = top;
  for (int x : xs) acc = meet_at(acc, x);
  return acc;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int acc = bottom;
  for (int x : xs) acc = join_at(acc, x);
  return acc;
}

FiniteLattice lattice_from_order(int n, const std::vector<char>& leq,
                                 std::vector<std::string> labels) {
  if (n <= 0 || n > 1024) throw SizeLimit("lattice carrier must have 1..1024 elements");
  if (static_cast<int>(leq.size()) != n * n)
    throw SchemaError("order matrix size mismatch");
  FiniteLattice l;
  l.n = n;
  l.leq = leq;
  l.labels = std::move(labels);
  if (l.labels.empty()) {
    l.labels.resize(n);
    for (int i = 0; i < n; ++i) l.labels[i] = "e" + std::to_string(i);
  }

  auto le = [&](int a, int b) { return leq[a * n + b] != 0; };
  for (int a = 0; a < n; ++a) {
    if (!le(a, a)) throw SchemaError("order is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw SchemaError("order is not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw SchemaError("order is not transitive");
    }
  }

  l.meet.assign(n * n, -1);
  l.join.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (int c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
          if (greatest) m = c;
        }
        if (le(a, c) && le(b, c)) {
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          if (least) j = c;
        }
      }
      if (m < 0 || j < 0)
        throw SchemaError("order is not a lattice: pair (" +
                          std::to_string(a) + ", " + std::to_string(b) +
                          ") lacks a meet or join");
      l.meet[a * n + b] = m;
      l.join[a * n + b] = j;
    }

  int bot = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    bool isbot = true, istop = true;
    for (int b = 0; b < n; ++b) {
      isbot &= le(a, b);
      istop &= le(b, a);
    }
    if (isbot) bot = a;
    if (istop) top = a;
  }
  if (bot < 0 || top < 0) throw SchemaError("lattice is not bounded");
  l.bottom = bot;
  l.top = top;
  return l;
}

bool is_distributive(const FiniteLattice& l) {
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      for (int c = 0; c < l.n; ++c)
        if (l.meet_at(a, l.join_at(b, c)) !=
            l.join_at(l.meet_at(a, b), l.meet_at(a, c)))
          return false;
  return true;
}

bool is_compact_locale(const FiniteLattice& l) {
  // Finite lattices are compact: every subset is its own finite subjoin.
  // The evaluated surrogate: the join-irreducible elements generate, so in
  // particular finitely many of them join to the top.
  std::vector<int> gens = completely_prime_generators(l);
  for (int a = 0; a < l.n; ++a) {
    std::vector<int> below;
    for (int g : gens)
      if (l.leq_at(g, a)) below.push_back(g);
    if (l.join_all(below) != a) return false;
  }
  return l.join_all(gens) == l.top;
}

std::vector<int> complemented_elements_of(const FiniteLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      if (l.meet_at(a, b) == l.bottom && l.join_at(a, b) == l.top) {
        out.push_back(a);
        break;
      }
  return out;
}

bool is_zero_dimensional(const FiniteLattice& l) {
  std::vector<int> z = complemented_elements_of(l);
  for (int a = 0; a < l.n; ++a) {
    std::vector<int> below;
    for (int c : z)
      if (l.leq_at(c, a)) below.push_back(c);
    if (l.join_all(below) != a) return false;
  }
  return true;
}

bool is_stone_locale(const FiniteLattice& l) {
  return is_distributive(l) && is_compact_locale(l) && is_zero_dimensional(l);
}

std::vector<int> completely_prime_generators(const FiniteLattice& l) {
  std::vector<int> out;
  for (int v = 0; v < l.n; ++v) {
    if (v == l.bottom) continue;
    // join-irreducible: v is not the join of its strict predecessors
    std::vector<int> strictly_below;
    for (int w = 0; w < l.n; ++w)
      if (w != v && l.leq_at(w, v)) strictly_below.push_back(w);
    if (l.join_all(strictly_below) != v) out.push_back(v);
  }
  return out;
}

bool is_completely_prime_upset(const FiniteLattice& l, int x) {
  if (x == l.bottom) return false;  // bottom's upset contains 0: improper
  // up(x) is automatically proper (excludes bottom unless x = bottom),
  // upward closed and meet closed; primeness is the real content.
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      if (l.leq_at(x, l.join_at(a, b)) && !l.leq_at(x, a) && !l.leq_at(x, b))
        return false;
  return true;
}

}  // namespace uvlab
