#include "uvlab/balg.hpp"

#include <algorithm>
#include <stdexcept>

#include "uvlab/errors.hpp"
#include "uvlab/limits.hpp"
#include "uvlab/poset.hpp"

namespace uvlab {

Limits& limits() {
  static Limits g;
  return g;
}

void FiniteBA::check_element(Mask a) const {
  if (a & ~one())
    throw UnknownElement("element mask " + std::to_string(a) +
                         " is not in a " + std::to_string(atoms) +
                         "-atom algebra");
}

std::string FiniteBA::element_name(Mask a) const {
  if (a == 0) return "0";
  if (a == one()) return "1";
  std::string out;
  for (int i : mask_elems(a)) {
    if (!out.empty()) out += "+";
    out += atom_labels.empty() ? "a" + std::to_string(i) : atom_labels[i];
  }
  return out;
}

Mask BAFilter::generator() const {
  Mask g = ~Mask{0};
  for (int e : mask_elems(elems)) g &= static_cast<Mask>(e);
  return g;
}

Mask BAIdeal::generator() const {
  Mask g = 0;
  for (int e : mask_elems(elems)) g |= static_cast<Mask>(e);
  return g;
}

FiniteBA powerset_ba(int k) {
  if (k < 0) throw SchemaError("negative atom count");
  if (k > limits().max_atoms)
    throw SizeLimit("atom count " + std::to_string(k) + " exceeds limit " +
                    std::to_string(limits().max_atoms));
  FiniteBA a;
  a.atoms = k;
  return a;
}

// ---- filters and ideals --------------------------------------------------

namespace {

bool filter_elems_less(Mask a, Mask b) { return family_less(a, b); }

// Enumerates the subsets of `ids` (a bitset over element ids) that are
// closed under moving to any element in closure_row[id], by DFS in an order
// where every closure target is decided before its source.
template <typename Leaf>
void enumerate_closed_subsets(const std::vector<int>& order,
                              const std::vector<Mask>& closure_row,
                              Leaf&& leaf) {
  Mask included = 0;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      leaf(included);
      return;
    }
    int a = order[i];
    self(self, i + 1);
    if ((closure_row[a] & ~included) == 0) {
      included |= Mask{1} << a;
      self(self, i + 1);
      included &= ~(Mask{1} << a);
    }
  };
  dfs(dfs, 0);
}

void check_filter_scale(const FiniteBA& a, const char* what) {
  if (a.degenerate())
    throw DegenerateBA(std::string(what) + " needs a nondegenerate algebra");
  if (a.atoms > 6)
    throw SizeLimit(std::string(what) + " is limited to 6 atoms");
}

}  // namespace

bool is_filter(const FiniteBA& a, Mask elems, bool require_proper) {
  if (elems == 0) return false;
  if (require_proper && mask_has(elems, 0)) return false;
  std::vector<int> members = mask_elems(elems);
  for (int e : members) {
    for (Mask b = e;; b = (b + 1) | e) {  // supersets of e's atom mask
      if (b < static_cast<Mask>(a.size()) && !mask_has(elems, (int)b))
        return false;
      if (b == a.one()) break;
    }
  }
  for (int e : members)
    for (int f : members)
      if (!mask_has(elems, (int)a.meet(e, f))) return false;
  return true;
}

bool is_ideal(const FiniteBA& a, Mask elems) {
  if (elems == 0) return false;
  std::vector<int> members = mask_elems(elems);
  for (int e : members)
    for (Mask b = 0;; b = (b - e) & e) {  // subsets of e's atom mask
      if (!mask_has(elems, (int)b)) return false;
      if (b == static_cast<Mask>(e)) break;
    }
  for (int e : members)
    for (int f : members)
      if (!mask_has(elems, (int)a.join(e, f))) return false;
  return true;
}

std::vector<BAFilter> enumerate_proper_filters(const FiniteBA& a) {
  check_filter_scale(a, "filter enumeration");
  int sz = a.size();

  // Ids in an order where every strict BA-superset precedes its subsets,
  // so upward closure is a check against already-decided ids.  Id 0 is
  // excluded outright: proper filters avoid it.
  std::vector<int> order;
  for (int e = 1; e < sz; ++e) order.push_back(e);
  std::sort(order.begin(), order.end(), [](int x, int y) {
    int px = mask_size(static_cast<Mask>(x)), py = mask_size(static_cast<Mask>(y));
    if (px != py) return px > py;
    return x < y;
  });
  std::vector<Mask> strict_sup(sz, 0);
  for (int e = 1; e < sz; ++e)
    for (int f = 1; f < sz; ++f)
      if (f != e && mask_subset(static_cast<Mask>(e), static_cast<Mask>(f)))
        strict_sup[e] |= Mask{1} << f;

  std::vector<BAFilter> out;
  enumerate_closed_subsets(order, strict_sup, [&](Mask upset) {
    if (!upset) return;
    std::vector<int> members = mask_elems(upset);
    for (int e : members)
      for (int f : members)
        if (!mask_has(upset, (int)a.meet(e, f))) return;
    out.push_back(BAFilter{upset});
  });
  std::sort(out.begin(), out.end(), [](const BAFilter& x, const BAFilter& y) {
    return filter_elems_less(x.elems, y.elems);
  });
  return out;
}

std::vector<BAFilter> principal_proper_filters(const FiniteBA& a) {
  check_filter_scale(a, "filter enumeration");
  std::vector<BAFilter> out;
  for (Mask g = 1; g < static_cast<Mask>(a.size()); ++g) {
    Mask elems = 0;
    for (Mask b = g;; b = (b + 1) | g) {
      elems |= Mask{1} << b;
      if (b == a.one()) break;
    }
    out.push_back(BAFilter{elems});
  }
  std::sort(out.begin(), out.end(), [](const BAFilter& x, const BAFilter& y) {
    return filter_elems_less(x.elems, y.elems);
  });
  return out;
}

std::optional<BAFilter> filter_generated(const FiniteBA& a, Mask seed_elems) {
  check_filter_scale(a, "filter generation");
  Mask g = a.one();
  for (int e : mask_elems(seed_elems)) g = a.meet(g, static_cast<Mask>(e));
  if (g == 0) return std::nullopt;
  Mask elems = 0;
  for (Mask b = g;; b = (b + 1) | g) {
    elems |= Mask{1} << b;
    if (b == a.one()) break;
  }
  return BAFilter{elems};
}

std::vector<BAIdeal> enumerate_ideals(const FiniteBA& a) {
  check_filter_scale(a, "ideal enumeration");
  int sz = a.size();
  std::vector<int> order;
  for (int e = 0; e < sz; ++e) order.push_back(e);
  std::sort(order.begin(), order.end(), [](int x, int y) {
    int px = mask_size(static_cast<Mask>(x)), py = mask_size(static_cast<Mask>(y));
    if (px != py) return px < py;
    return x < y;
  });
  std::vector<Mask> strict_sub(sz, 0);
  for (int e = 0; e < sz; ++e)
    for (int f = 0; f < sz; ++f)
      if (f != e && mask_subset(static_cast<Mask>(f), static_cast<Mask>(e)))
        strict_sub[e] |= Mask{1} << f;

  std::vector<BAIdeal> out;
  enumerate_closed_subsets(order, strict_sub, [&](Mask downset) {
    if (!downset) return;
    std::vector<int> members = mask_elems(downset);
    for (int e : members)
      for (int f : members)
        if (!mask_has(downset, (int)a.join(e, f))) return;
    out.push_back(BAIdeal{downset});
  });

  // Finite sanity: the ideals of a finite BA are exactly the principal ones.
  if (out.size() != static_cast<std::size_t>(sz))
    throw std::logic_error("ideal enumeration does not match the principal count");
  std::sort(out.begin(), out.end(), [](const BAIdeal& x, const BAIdeal& y) {
    return filter_elems_less(x.elems, y.elems);
  });
  return out;
}

Mask upper_bounds(const FiniteBA& a, Mask elems) {
  Mask out = 0;
  for (Mask b = 0; b < static_cast<Mask>(a.size()); ++b) {
    bool ub = true;
    for (int e : mask_elems(elems)) ub &= a.leq(static_cast<Mask>(e), b);
    if (ub) out |= Mask{1} << b;
  }
  return out;
}

Mask lower_bounds(const FiniteBA& a, Mask elems) {
  Mask out = 0;
  for (Mask b = 0; b < static_cast<Mask>(a.size()); ++b) {
    bool lb = true;
    for (int e : mask_elems(elems)) lb &= a.leq(b, static_cast<Mask>(e));
    if (lb) out |= Mask{1} << b;
  }
  return out;
}

bool is_normal_ideal(const FiniteBA& a, const BAIdeal& ideal) {
  if (!is_ideal(a, ideal.elems))
    throw NotAnIdeal("argument is not an ideal");
  Mask u = upper_bounds(a, ideal.elems);
  Mask ul = lower_bounds(a, u);
  return ul == ideal.elems;
}

bool is_maximal_filter(const FiniteBA& a, const BAFilter& f) {
  if (!is_filter(a, f.elems, /*require_proper=*/true)) return false;
  for (const BAFilter& g : enumerate_proper_filters(a))
    if (f.elems != g.elems && mask_subset(f.elems, g.elems)) return false;
  return true;
}

bool is_maximal_ideal(const FiniteBA& a, const BAIdeal& ideal) {
  if (!is_ideal(a, ideal.elems)) return false;
  Mask unit = full_mask(a.size());
  if (ideal.elems == unit) return false;
  for (const BAIdeal& j : enumerate_ideals(a))
    if (j.elems != unit && ideal.elems != j.elems &&
        mask_subset(ideal.elems, j.elems))
      return false;
  return true;
}

// ---- tables ---------------------------------------------------------------

namespace {

[[noreturn]] void axiom_fail(const std::string& axiom, int x, int y, int z) {
  std::string w = "witness (" + std::to_string(x);
  if (y >= 0) w += ", " + std::to_string(y);
  if (z >= 0) w += ", " + std::to_string(z);
  w += ")";
  throw AxiomViolation(axiom + ", " + w);
}

}  // namespace

TableValidation ba_from_tables(int carrier,
                               const std::vector<std::vector<int>>& meet,
                               const std::vector<std::vector<int>>& join,
                               const std::vector<int>& neg, int zero,
                               int one) {
  if (carrier <= 0 || carrier > 64)
    throw SizeLimit("table carrier must have 1..64 elements");
  auto in_range = [&](int v) { return v >= 0 && v < carrier; };
  if (!in_range(zero) || !in_range(one))
    throw SchemaError("zero/one out of range");
  if (static_cast<int>(meet.size()) != carrier ||
      static_cast<int>(join.size()) != carrier ||
      static_cast<int>(neg.size()) != carrier)
    throw SchemaError("table sizes do not match the carrier");
  for (int i = 0; i < carrier; ++i) {
    if (static_cast<int>(meet[i].size()) != carrier ||
        static_cast<int>(join[i].size()) != carrier)
      throw SchemaError("table rows do not match the carrier");
    if (!in_range(neg[i])) throw SchemaError("neg table out of range");
    for (int j = 0; j < carrier; ++j)
      if (!in_range(meet[i][j]) || !in_range(join[i][j]))
        throw SchemaError("table entry out of range");
  }

  for (int x = 0; x < carrier; ++x) {
    if (meet[x][one] != x) axiom_fail("meet identity", x, -1, -1);
    if (join[x][zero] != x) axiom_fail("join identity", x, -1, -1);
    if (meet[x][neg[x]] != zero) axiom_fail("complement meet", x, -1, -1);
    if (join[x][neg[x]] != one) axiom_fail("complement join", x, -1, -1);
    for (int y = 0; y < carrier; ++y) {
      if (meet[x][y] != meet[y][x]) axiom_fail("meet commutativity", x, y, -1);
      if (join[x][y] != join[y][x]) axiom_fail("join commutativity", x, y, -1);
      if (meet[x][join[x][y]] != x) axiom_fail("absorption", x, y, -1);
      if (join[x][meet[x][y]] != x) axiom_fail("absorption (dual)", x, y, -1);
      for (int z = 0; z < carrier; ++z) {
        if (meet[x][meet[y][z]] != meet[meet[x][y]][z])
          axiom_fail("meet associativity", x, y, z);
        if (join[x][join[y][z]] != join[join[x][y]][z])
          axiom_fail("join associativity", x, y, z);
        if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]])
          axiom_fail("distributivity", x, y, z);
        if (join[x][meet[y][z]] != meet[join[x][y]][join[x][z]])
          axiom_fail("distributivity (dual)", x, y, z);
      }
    }
  }

  auto table_leq = [&](int x, int y) { return meet[x][y] == x; };
  std::vector<int> atoms;
  for (int x = 0; x < carrier; ++x) {
    if (x == zero) continue;
    bool minimal = true;
    for (int y = 0; y < carrier; ++y)
      if (y != zero && y != x && table_leq(y, x)) minimal = false;
    if (minimal) atoms.push_back(x);
  }
  int k = static_cast<int>(atoms.size());
  if ((1 << k) != carrier)
    throw std::logic_error("atom coordinatization failed on a validated BA");

  std::vector<Mask> renaming(carrier, 0);
  for (int x = 0; x < carrier; ++x)
    for (int i = 0; i < k; ++i)
      if (table_leq(atoms[i], x)) renaming[x] |= Mask{1} << i;
  // The renaming must be a bijection carrying the tables to mask operations.
  std::vector<int> seen(1 << k, 0);
  for (int x = 0; x < carrier; ++x) seen[renaming[x]]++;
  for (int v : seen)
    if (v != 1) throw std::logic_error("atom renaming is not a bijection");
  for (int x = 0; x < carrier; ++x)
    for (int y = 0; y < carrier; ++y) {
      if (renaming[meet[x][y]] != (renaming[x] & renaming[y]) ||
          renaming[join[x][y]] != (renaming[x] | renaming[y]))
        throw std::logic_error("atom renaming does not preserve operations");
    }

  TableValidation out;
  out.ba.atoms = k;
  out.renaming = std::move(renaming);
  return out;
}

// ---- products, relativization, subalgebras -------------------------------

FiniteBA product_ba(const FiniteBA& a, const FiniteBA& b) {
  if (a.atoms + b.atoms > limits().max_atoms)
    throw SizeLimit("product exceeds the atom limit");
  FiniteBA p;
  p.atoms = a.atoms + b.atoms;
  if (!a.atom_labels.empty() || !b.atom_labels.empty()) {
    for (int i = 0; i < a.atoms; ++i)
      p.atom_labels.push_back(
          (a.atom_labels.empty() ? "a" + std::to_string(i) : a.atom_labels[i]) +
          ".l");
    for (int i = 0; i < b.atoms; ++i)
      p.atom_labels.push_back(
          (b.atom_labels.empty() ? "a" + std::to_string(i) : b.atom_labels[i]) +
          ".r");
  }
  return p;
}

Mask product_elem(const FiniteBA& a, const FiniteBA& b, Mask ea, Mask eb) {
  a.check_element(ea);
  b.check_element(eb);
  return ea | (eb << a.atoms);
}

std::pair<Mask, Mask> product_split(const FiniteBA& a, const FiniteBA& b,
                                    Mask e) {
  (void)b;
  return {e & a.one(), e >> a.atoms};
}

Relativization relativize(const FiniteBA& a, Mask rel_to) {
  a.check_element(rel_to);
  if (rel_to == 0) throw ZeroRelativization("cannot relativize to 0");
  Relativization out;
  out.ba.atoms = mask_size(rel_to);
  std::vector<int> atom_ids = mask_elems(rel_to);
  out.to_parent.resize(out.ba.size());
  for (Mask s = 0; s < static_cast<Mask>(out.ba.size()); ++s) {
    Mask parent = 0;
    for (int j : mask_elems(s)) parent |= Mask{1} << atom_ids[j];
    out.to_parent[s] = parent;
  }
  return out;
}

bool is_homomorphism(const BAHom& h) {
  if (h.map.size() != static_cast<std::size_t>(h.dom.size())) return false;
  for (Mask x : h.map)
    if (x & ~h.cod.one()) return false;
  if (h.map[0] != 0) return false;
  if (h.map[h.dom.one()] != h.cod.one()) return false;
  for (Mask x = 0; x < static_cast<Mask>(h.dom.size()); ++x) {
    if (h.map[h.dom.complement(x)] != h.cod.complement(h.map[x])) return false;
    for (Mask y = x; y < static_cast<Mask>(h.dom.size()); ++y)
      if (h.map[x & y] != (h.map[x] & h.map[y])) return false;
  }
  return true;
}

bool is_injective(const BAHom& h) {
  std::vector<char> seen(h.cod.size(), 0);
  for (Mask x : h.map) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_surjective(const BAHom& h) {
  std::vector<char> seen(h.cod.size(), 0);
  for (Mask x : h.map) seen[x] = 1;
  for (char c : seen)
    if (!c) return false;
  return true;
}

BAHom identity_hom(const FiniteBA& a) {
  BAHom h{a, a, {}};
  h.map.resize(a.size());
  for (Mask x = 0; x < static_cast<Mask>(a.size()); ++x) h.map[x] = x;
  return h;
}

BAHom compose_hom(const BAHom& later, const BAHom& earlier) {
  if (later.dom.atoms != earlier.cod.atoms)
    throw NotAHomomorphism("composition domains do not line up");
  BAHom h{earlier.dom, later.cod, {}};
  h.map.resize(earlier.dom.size());
  for (Mask x = 0; x < static_cast<Mask>(earlier.dom.size()); ++x)
    h.map[x] = later.map[earlier.map[x]];
  return h;
}

std::vector<BAHom> enumerate_homs(const FiniteBA& dom, const FiniteBA& cod) {
  if (dom.degenerate() || cod.degenerate())
    throw DegenerateBA("hom enumeration needs nondegenerate algebras");
  // Homomorphisms dom -> cod correspond to functions atoms(cod) ->
  // atoms(dom): h(a) = {beta | g(beta) in a}.
  std::size_t total = 1;
  for (int i = 0; i < cod.atoms; ++i) {
    total *= static_cast<std::size_t>(dom.atoms);
    if (total > 1u << 20) throw SizeLimit("too many atom functions");
  }
  std::vector<BAHom> out;
  std::vector<int> g(cod.atoms, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t t = idx;
    for (int b = 0; b < cod.atoms; ++b) {
      g[b] = static_cast<int>(t % dom.atoms);
      t /= dom.atoms;
    }
    BAHom h{dom, cod, {}};
    h.map.resize(dom.size());
    for (Mask a = 0; a < static_cast<Mask>(dom.size()); ++a) {
      Mask img = 0;
      for (int b = 0; b < cod.atoms; ++b)
        if (mask_has(a, g[b])) img |= Mask{1} << b;
      h.map[a] = img;
    }
    if (!is_homomorphism(h))
      throw std::logic_error("atom-function generation produced a non-hom");
    out.push_back(std::move(h));
  }
  return out;
}

ROAlgebra ro_algebra(const Poset& p) {
  std::vector<Mask> family = all_ro_upsets(p);
  int c = static_cast<int>(family.size());
  if (c > 64) throw SizeLimit("regular open family exceeds 64 sets");

  auto index_of = [&](Mask s) {
    for (int i = 0; i < c; ++i)
      if (family[i] == s) return i;
    throw CounterexampleError(
        "regular open upsets are not closed under the algebra operations",
        R"({"theorem":"ro-algebra"})");
  };
  std::vector<std::vector<int>> meet(c, std::vector<int>(c)),
      join(c, std::vector<int>(c));
  std::vector<int> neg(c);
  for (int i = 0; i < c; ++i) {
    neg[i] = index_of(neg_le(p, family[i]));
    for (int j = 0; j < c; ++j) {
      meet[i][j] = index_of(family[i] & family[j]);
      join[i][j] = index_of(int_le(p, cl_le(p, family[i] | family[j])));
    }
  }
  TableValidation v;
  try {
    v = ba_from_tables(c, meet, join, neg, index_of(0),
                       index_of(p.carrier()));
  } catch (const AxiomViolation& e) {
    throw CounterexampleError(
        std::string("regular open algebra failed validation: ") + e.what(),
        R"({"theorem":"ro-algebra"})");
  }
  ROAlgebra out;
  out.ba = v.ba;
  out.ba.origin = "ro-upsets";
  out.sets.resize(out.ba.size());
  for (int i = 0; i < c; ++i) out.sets[v.renaming[i]] = family[i];
  out.ba.element_sets = out.sets;
  return out;
}

Subalgebra subalgebra_generated(const FiniteBA& a, Mask seed_elems) {
  if (a.atoms > 6) throw SizeLimit("subalgebra closure is limited to 6 atoms");
  Mask members = seed_elems;
  members |= Mask{1} << 0;
  members |= Mask{1} << a.one();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> cur = mask_elems(members);
    for (int e : cur) {
      Mask c = a.complement(static_cast<Mask>(e));
      if (!mask_has(members, (int)c)) {
        members |= Mask{1} << c;
        changed = true;
      }
      for (int f : cur) {
        Mask m = a.meet(static_cast<Mask>(e), static_cast<Mask>(f));
        if (!mask_has(members, (int)m)) {
          members |= Mask{1} << m;
          changed = true;
        }
      }
    }
  }
  // Atoms of the subalgebra: minimal nonzero members.
  std::vector<int> elems = mask_elems(members);
  std::vector<Mask> sub_atoms;
  for (int e : elems) {
    if (e == 0) continue;
    bool minimal = true;
    for (int f : elems)
      if (f != 0 && f != e &&
          a.leq(static_cast<Mask>(f), static_cast<Mask>(e)))
        minimal = false;
    if (minimal) sub_atoms.push_back(static_cast<Mask>(e));
  }
  int k = static_cast<int>(sub_atoms.size());
  if ((std::size_t{1} << k) != elems.size())
    throw std::logic_error("subalgebra closure is not atom-coordinatizable");

  Subalgebra out;
  out.ba.atoms = k;
  out.to_parent.resize(out.ba.size());
  for (Mask s = 0; s < static_cast<Mask>(out.ba.size()); ++s) {
    Mask parent = 0;
    for (int j : mask_elems(s)) parent |= sub_atoms[j];
    out.to_parent[s] = parent;
  }
  out.inclusion = BAHom{out.ba, a, out.to_parent};
  if (!is_homomorphism(out.inclusion) || !is_injective(out.inclusion))
    throw std::logic_error("subalgebra inclusion failed verification");
  return out;
}

}  // namespace uvlab
