#include "uvlab/hyperlocale.hpp"

#include <algorithm>
#include <set>

#include "uvlab/errors.hpp"
#include "uvlab/limits.hpp"

namespace uvlab {

FiniteSpace discrete_space(int n) {
  if (n < 1) throw EmptySpace("a Stone space needs at least one point");
  if (n > 63) throw SizeLimit("discrete space capped at 63 points");
  std::vector<Mask> up(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    up[i] = Mask{1} << i;
    labels[i] = std::string(1, static_cast<char>('a' + (i % 26))) +
                (i >= 26 ? std::to_string(i / 26) : "");
  }
  return FiniteSpace{poset_from_up_rows(std::move(up), std::move(labels))};
}

namespace {

bool is_discrete(const FiniteSpace& x) {
  for (int i = 0; i < x.points(); ++i)
    if (x.order.up[i] != (Mask{1} << i)) return false;
  return true;
}

std::string set_label(const FiniteSpace& base, Mask s) {
  std::string out = "{";
  for (int p : mask_elems(s)) {
    if (out.size() > 1) out += ",";
    out += base.order.label(p);
  }
  return out + "}";
}

// Specialization preorder of the topology generated by `gens`: p <= q iff
// every generator containing p contains q.  Must be antisymmetric here.
Poset specialization_from_generators(int n, const std::vector<Mask>& gens,
                                     std::vector<std::string> labels) {
  std::vector<Mask> up(n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool le = true;
      for (Mask g : gens)
        if (mask_has(g, p) && !mask_has(g, q)) {
          le = false;
          break;
        }
      if (le) up[p] |= Mask{1} << q;
    }
  return poset_from_up_rows(std::move(up), std::move(labels));
}

}  // namespace

FiniteBA clop_algebra(const FiniteSpace& stone) {
  if (!is_discrete(stone))
    throw NotStone("finite Stone spaces are the discrete ones");
  FiniteBA a = powerset_ba(stone.points());
  a.atom_labels = stone.order.labels;
  a.origin = "clop";
  return a;
}

Hyperspace uv_hyperspace(const FiniteSpace& stone) {
  if (!is_discrete(stone))
    throw NotStone("finite Stone spaces are the discrete ones");
  int n = stone.points();
  if (n > limits().max_atoms)
    throw SizeLimit("hyperspace base capped at " +
                    std::to_string(limits().max_atoms) + " points");

  Hyperspace h;
  for (Mask s = 1; s <= stone.carrier(); ++s) h.point_sets.push_back(s);
  sort_family(h.point_sets);
  int pts = static_cast<int>(h.point_sets.size());

  std::vector<std::string> labels(pts);
  for (int i = 0; i < pts; ++i) labels[i] = set_label(stone, h.point_sets[i]);

  // box(U) for every clopen U (all subsets of a finite Stone space).
  for (Mask u = 0; u <= stone.carrier(); ++u) {
    Mask g = 0;
    for (int i = 0; i < pts; ++i)
      if (mask_subset(h.point_sets[i], u)) g |= Mask{1} << i;
    h.gen.generators.push_back(g);
    h.gen.generator_labels.push_back("box" + set_label(stone, u));
    if (u == stone.carrier()) break;
  }

  h.gen.space = FiniteSpace{specialization_from_generators(
      pts, h.gen.generators, std::move(labels))};

  // The specialization order must be reverse inclusion of closed sets.
  for (int i = 0; i < pts; ++i)
    for (int j = 0; j < pts; ++j)
      if (h.gen.space.order.leq(i, j) !=
          mask_subset(h.point_sets[j], h.point_sets[i]))
        throw CounterexampleError(
            "hyperspace specialization is not reverse inclusion",
            R"({"theorem":"hyperspace-order"})");
  return h;
}

HyperWitness check_hyperspace_representation(const FiniteSpace& stone) {
  HyperWitness w{uv_hyperspace(stone), uv_dual(clop_algebra(stone)), {}, false};
  int pts = w.hyper.gen.space.points();
  if (w.dual.space.points() != pts)
    throw CounterexampleError("hyperspace and dual have different sizes",
                              R"({"theorem":"hyperspace-representation"})");

  // f(C) = {U clopen | C included in U}; clopens are the algebra elements.
  w.map.resize(pts);
  std::vector<char> used(pts, 0);
  for (int i = 0; i < pts; ++i) {
    Mask c = w.hyper.point_sets[i];
    Mask filt = 0;
    for (Mask u = 0; u <= stone.carrier(); ++u) {
      if (mask_subset(c, u)) filt |= Mask{1} << u;
      if (u == stone.carrier()) break;
    }
    w.map[i] = w.dual.point_of_filter(filt);
    if (used[w.map[i]])
      throw CounterexampleError("hyperspace comparison map is not injective",
                                R"({"theorem":"hyperspace-representation"})");
    used[w.map[i]] = 1;
  }

  // Basic-open identities in both directions: the preimage of hat(U) is
  // box(U), and the image of box(U) is hat(U).
  for (Mask u = 0; u <= stone.carrier(); ++u) {
    Mask hat_u = hat(w.dual, u);
    Mask box_u = 0;
    for (int i = 0; i < pts; ++i)
      if (mask_subset(w.hyper.point_sets[i], u)) box_u |= Mask{1} << i;
    Mask pre = 0, img = 0;
    for (int i = 0; i < pts; ++i) {
      if (mask_has(hat_u, w.map[i])) pre |= Mask{1} << i;
      if (mask_has(box_u, i)) img |= Mask{1} << w.map[i];
    }
    if (pre != box_u || img != hat_u)
      throw CounterexampleError("basic-open identities failed",
                                R"({"theorem":"hyperspace-representation"})");
    if (u == stone.carrier()) break;
  }
  w.ok = true;
  return w;
}

FilterLocale filt_locale(const FiniteBA& a) {
  if (a.degenerate()) throw DegenerateBA("filter locale of a degenerate BA");
  if (a.atoms > limits().max_atoms) throw SizeLimit("filter locale too large");

  FilterLocale out;
  for (const BAFilter& f : enumerate_proper_filters(a))
    out.filter_elems.push_back(f.elems);
  out.filter_elems.push_back(full_mask(a.size()));  // improper filter on top
  int n = static_cast<int>(out.filter_elems.size());
  out.improper = n - 1;

  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i * n + j] = mask_subset(out.filter_elems[i], out.filter_elems[j]);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    Mask g = BAFilter{out.filter_elems[i]}.generator();
    labels[i] = "up(" + a.element_name(g) + ")";
  }
  out.lattice = lattice_from_order(n, leq, std::move(labels));

  // Lattice structure sanity: meet is intersection, join is the filter
  // generated by the union.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mask inter = out.filter_elems[i] & out.filter_elems[j];
      if (out.filter_elems[out.lattice.meet_at(i, j)] != inter)
        throw CounterexampleError("filter meet is not intersection",
                                  R"({"theorem":"filter-locale"})");
      auto gen = filter_generated(a, out.filter_elems[i] |
                                         out.filter_elems[j]);
      Mask join_elems = gen ? gen->elems : full_mask(a.size());
      if (out.filter_elems[out.lattice.join_at(i, j)] != join_elems)
        throw CounterexampleError("filter join is not the generated filter",
                                  R"({"theorem":"filter-locale"})");
    }

  if (!is_stone_locale(out.lattice))
    throw CounterexampleError("filter lattice is not a Stone locale",
                              R"({"theorem":"filter-locale"})");
  return out;
}

ComplementedElements complemented_elements(const FiniteLattice& l) {
  std::vector<int> z = complemented_elements_of(l);
  std::vector<int> index_of(l.n, -1);
  for (std::size_t i = 0; i < z.size(); ++i) index_of[z[i]] = (int)i;

  int m = static_cast<int>(z.size());
  for (int a : z) {  // closure under the lattice operations
    for (int b : z) {
      if (index_of[l.meet_at(a, b)] < 0 || index_of[l.join_at(a, b)] < 0)
        throw NotBoolean("complemented elements are not closed under the "
                         "lattice operations");
    }
  }
  std::vector<std::vector<int>> meet(m, std::vector<int>(m)),
      join(m, std::vector<int>(m));
  std::vector<int> neg(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      meet[i][j] = index_of[l.meet_at(z[i], z[j])];
      join[i][j] = index_of[l.join_at(z[i], z[j])];
    }
    int comps = 0;
    for (int j = 0; j < m; ++j)
      if (l.meet_at(z[i], z[j]) == l.bottom &&
          l.join_at(z[i], z[j]) == l.top) {
        neg[i] = j;
        ++comps;
      }
    if (comps != 1)
      throw NotBoolean("complement is not unique among complemented elements");
  }

  TableValidation v;
  try {
    v = ba_from_tables(m, meet, join, neg, index_of[l.bottom],
                       index_of[l.top]);
  } catch (const AxiomViolation& e) {
    throw NotBoolean(std::string("complemented elements fail the algebra "
                                 "axioms: ") +
                     e.what());
  }
  ComplementedElements out;
  out.ba = v.ba;
  out.to_lattice.resize(out.ba.size());
  for (int i = 0; i < m; ++i) out.to_lattice[v.renaming[i]] = z[i];
  return out;
}

GeneratedSpace upper_vietoris_of_locale(const FiniteLattice& l) {
  if (!is_distributive(l))
    throw NotStoneLocale("the lattice is not a frame");
  if (!is_zero_dimensional(l))
    throw NotStoneLocale("the locale is not zero-dimensional");
  if (!is_compact_locale(l)) throw NotStoneLocale("the locale is not compact");

  int pts = l.n - 1;  // every element except the top
  std::vector<int> point_elem;
  std::vector<int> point_of(l.n, -1);
  for (int e = 0; e < l.n; ++e)
    if (e != l.top) {
      point_of[e] = static_cast<int>(point_elem.size());
      point_elem.push_back(e);
    }

  GeneratedSpace out;
  for (int x = 0; x < l.n; ++x) {
    Mask g = 0;
    for (int i = 0; i < pts; ++i)
      if (l.join_at(x, point_elem[i]) == l.top) g |= Mask{1} << i;
    out.generators.push_back(g);
    out.generator_labels.push_back("bsq(" + l.labels[x] + ")");
  }
  std::vector<std::string> labels(pts);
  for (int i = 0; i < pts; ++i) labels[i] = l.labels[point_elem[i]];
  try {
    out.space = FiniteSpace{
        specialization_from_generators(pts, out.generators, std::move(labels))};
  } catch (const CycleError&) {
    throw NotStoneLocale("the generated topology is not T0");
  }
  return out;
}

bool check_same_topologies(const FiniteBA& a) {
  if (a.degenerate()) throw DegenerateBA("needs a nondegenerate algebra");
  FilterLocale loc = filt_locale(a);
  DualSpace d = uv_dual(a);
  int pts = d.space.points();

  // Align locale points (non-top filters) with dual points by filter.
  std::vector<int> locale_point(loc.lattice.n, -1);
  {
    int next = 0;
    for (int e = 0; e < loc.lattice.n; ++e)
      if (e != loc.lattice.top) locale_point[e] = next++;
    if (next != pts) return false;
  }
  std::vector<int> to_dual(pts, -1);
  for (int e = 0; e < loc.lattice.n; ++e)
    if (e != loc.lattice.top)
      to_dual[locale_point[e]] = d.point_of_filter(loc.filter_elems[e]);

  auto transport = [&](Mask over_locale_points) {
    Mask out = 0;
    for (int i = 0; i < pts; ++i)
      if (mask_has(over_locale_points, i)) out |= Mask{1} << to_dual[i];
    return out;
  };

  // blacksquare generators, rendered over dual points.
  std::vector<Mask> bsq(loc.lattice.n);
  for (int x = 0; x < loc.lattice.n; ++x) {
    Mask g = 0;
    for (int e = 0; e < loc.lattice.n; ++e)
      if (e != loc.lattice.top &&
          loc.lattice.join_at(x, e) == loc.lattice.top)
        g |= Mask{1} << locale_point[e];
    bsq[x] = transport(g);
  }
  std::vector<Mask> hats(a.size());
  for (Mask e = 0; e < static_cast<Mask>(a.size()); ++e) hats[e] = hat(d, e);

  // Pointwise translation identities.
  for (Mask e = 0; e < static_cast<Mask>(a.size()); ++e) {
    // hat(e) = blacksquare(up(-e))
    auto up_neg = filter_generated(a, Mask{1} << a.complement(e));
    int lat = -1;
    for (int i = 0; i < loc.lattice.n; ++i)
      if (loc.filter_elems[i] == (up_neg ? up_neg->elems : full_mask(a.size())))
        lat = i;
    if (lat < 0 || bsq[lat] != hats[e]) return false;
  }
  for (int x = 0; x < loc.lattice.n; ++x) {
    Mask expect = 0;  // union of hat(-a) over a in the filter
    for (int e : mask_elems(loc.filter_elems[x]))
      expect |= hats[a.complement(static_cast<Mask>(e))];
    if (bsq[x] != expect) return false;
  }

  // Full generated-topology comparison as families of point sets.
  auto generated_topology = [&](const std::vector<Mask>& gens) {
    std::set<Mask> base;  // finite intersections
    Mask whole = full_mask(pts);
    base.insert(whole);
    std::vector<Mask> work(gens.begin(), gens.end());
    for (Mask g : work) base.insert(g);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Mask> cur(base.begin(), base.end());
      for (Mask u : cur)
        for (Mask v : cur)
          if (base.insert(u & v).second) changed = true;
    }
    std::set<Mask> opens;
    opens.insert(0);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Mask> cur(opens.begin(), opens.end());
      for (Mask u : cur)
        for (Mask b : base)
          if (opens.insert(u | b).second) changed = true;
    }
    return opens;
  };
  return generated_topology(bsq) == generated_topology(hats);
}

bool check_uv_iff_locale(const FiniteSpace& x) {
  bool lhs = is_uv_space(x).ok();

  bool rhs = false;
  for (int k = 1; k <= x.points(); ++k) {
    if (k > limits().max_atoms) {
      if (((Mask{1} << k) - 1) <= static_cast<Mask>(x.points()))
        throw SizeLimit("locale search exceeds the atom limit");
      break;
    }
    if (((Mask{1} << k) - 1) != static_cast<Mask>(x.points())) continue;
    FilterLocale loc = filt_locale(powerset_ba(k));
    GeneratedSpace uvl = upper_vietoris_of_locale(loc.lattice);
    if (homeomorphic(x, uvl.space)) {
      rhs = true;
      break;
    }
  }
  if (lhs != rhs)
    throw CounterexampleError(
        "UV axioms and the locale characterization disagree",
        R"({"theorem":"uv-iff-locale"})");
  return lhs;
}

}  // namespace uvlab
