#include "uvlab/dictionary.hpp"

#include <algorithm>
#include <unordered_set>

#include "uvlab/errors.hpp"
#include "uvlab/limits.hpp"

namespace uvlab {

Mask eta(const DualSpace& d, const BAFilter& f) {
  if (!is_filter(d.algebra, f.elems, /*require_proper=*/true))
    throw ImproperFilter("eta needs a proper filter");
  Mask out = d.space.carrier();
  for (int e : mask_elems(f.elems)) out &= hat(d, static_cast<Mask>(e));
  int point = d.point_of_filter(f.elems);
  if (out != d.space.order.up[point])
    throw CounterexampleError("eta is not the principal upset of its point",
                              R"({"theorem":"eta"})");
  return out;
}

Mask zeta(const DualSpace& d, const BAIdeal& ideal) {
  if (!is_ideal(d.algebra, ideal.elems))
    throw NotAnIdeal("zeta needs an ideal");
  Mask out = 0;
  for (int e : mask_elems(ideal.elems)) out |= hat(d, static_cast<Mask>(e));
  std::vector<Mask> family = oro(d.space);
  if (std::find(family.begin(), family.end(), out) == family.end())
    throw CounterexampleError("zeta left the ORO family",
                              R"({"theorem":"zeta"})");
  Mask recovered = 0;
  for (Mask a = 0; a < static_cast<Mask>(d.algebra.size()); ++a)
    if (mask_subset(hat(d, a), out)) recovered |= Mask{1} << a;
  if (recovered != ideal.elems)
    throw CounterexampleError("zeta inverse does not recover the ideal",
                              R"({"theorem":"zeta"})");
  return out;
}

DictReport maximal_rows(const DualSpace& d) {
  DictReport r;
  r.row = "maximal";
  const FiniteBA& a = d.algebra;

  std::vector<BAFilter> maxf;
  for (const BAFilter& f : enumerate_proper_filters(a))
    if (is_maximal_filter(a, f)) maxf.push_back(f);
  Mask max_points = d.space.order.maximal_elements();
  r.left_census = static_cast<int>(maxf.size());
  r.right_census = mask_size(max_points);

  bool pass = r.left_census == a.atoms && r.right_census == a.atoms;
  Mask seen = 0;
  for (const BAFilter& f : maxf) {
    Mask e = eta(d, f);
    if (mask_size(e) != 1 || !mask_subset(e, max_points)) pass = false;
    seen |= e;
  }
  pass &= seen == max_points;

  std::vector<BAIdeal> maxi;
  for (const BAIdeal& ideal : enumerate_ideals(a))
    if (is_maximal_ideal(a, ideal)) maxi.push_back(ideal);
  pass &= static_cast<int>(maxi.size()) == a.atoms;
  Mask seen_down = 0;
  for (const BAIdeal& ideal : maxi) {
    Mask z = zeta(d, ideal);
    // X minus the downset of a maximal point.
    bool matched = false;
    for (int p : mask_elems(max_points))
      if (z == (d.space.carrier() & ~d.space.order.down_row(p))) {
        matched = true;
        seen_down |= Mask{1} << p;
      }
    if (!matched) pass = false;
  }
  pass &= seen_down == max_points;

  r.pass = pass;
  r.detail = "maximal filters " + std::to_string(maxf.size()) +
             ", maximal points " + std::to_string(r.right_census);
  return r;
}

DictReport relativization_row(const FiniteSpace& x, Mask u) {
  COROAlgebra cx = coro_algebra(x);
  Mask e = cx.element_of(u);  // UnknownElement when u is not CORO
  if (e == 0) throw ZeroRelativization("relativization row needs U nonempty");

  SubspaceResult sub = subspace(x, u);
  COROAlgebra csub = coro_algebra(sub.space);
  Relativization rel = relativize(cx.ba, e);

  DictReport r;
  r.row = "relativization";
  r.left_census = rel.ba.size();
  r.right_census = csub.ba.size();

  // Transport the relativized elements into subspace coordinates and
  // compare the families.
  std::vector<int> new_id(x.points(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    new_id[sub.to_parent[i]] = static_cast<int>(i);
  std::vector<Mask> transported;
  for (Mask s = 0; s < static_cast<Mask>(rel.ba.size()); ++s) {
    Mask parent_set = cx.sets[rel.to_parent[s]];
    Mask t = 0;
    for (int p : mask_elems(parent_set & u)) t |= Mask{1} << new_id[p];
    transported.push_back(t);
  }
  std::vector<Mask> sub_family = csub.sets;
  sort_family(transported);
  sort_family(sub_family);
  r.pass = rel.ba.atoms == csub.ba.atoms && transported == sub_family;
  r.detail = "relativized to " + cx.ba.element_name(e);
  return r;
}

DictReport meet_join_formulas(const FiniteSpace& x,
                              const std::vector<Mask>& family,
                              const COROAlgebra& cx,
                              const std::vector<Mask>& opens) {
  DictReport r;
  r.row = "meet-join";
  r.left_census = static_cast<int>(family.size());

  Mask meet_elem = cx.ba.one(), join_elem = 0;
  Mask inter = x.carrier(), uni = 0;
  for (Mask u : family) {
    Mask e = cx.element_of(u);  // UnknownElement unless CORO
    meet_elem = cx.ba.meet(meet_elem, e);
    join_elem = cx.ba.join(join_elem, e);
    inter &= u;
    uni |= u;
  }
  auto interior = [&](Mask s) {
    Mask out = 0;
    for (Mask o : opens)
      if (mask_subset(o, s)) out |= o;
    return out;
  };
  Mask meet_set = interior(inter);
  Mask join_set = interior(x.carrier() & ~interior(x.carrier() & ~uni));
  r.pass = meet_set == cx.sets[meet_elem] && join_set == cx.sets[join_elem];
  r.right_census = 2;
  r.detail = "meet/join of " + std::to_string(family.size()) + " sets";
  return r;
}

DictReport meet_join_formulas(const FiniteSpace& x,
                              const std::vector<Mask>& family) {
  COROAlgebra cx = coro_algebra(x);
  DictReport r = meet_join_formulas(x, family, cx, open_sets(x));
  // Completeness transfers; at finite scale both sides are complete.
  r.pass &= is_complete_uv(x);
  return r;
}

DictReport atoms_row(const FiniteSpace& x) {
  COROAlgebra cx = coro_algebra(x);
  DictReport r;
  r.row = "atoms";
  Mask iso = isolated_points(x);
  r.left_census = cx.ba.atoms;
  r.right_census = mask_size(iso);

  bool pass = r.left_census == r.right_census;
  Mask covered = 0;
  for (int i = 0; i < cx.ba.atoms; ++i) {
    Mask set = cx.sets[Mask{1} << i];
    if (mask_size(set) != 1 || !mask_subset(set, iso)) pass = false;
    covered |= set;
  }
  pass &= covered == iso;

  // Atomicity three ways, evaluated literally.
  bool atomic_alg = true;
  for (Mask e = 1; e < static_cast<Mask>(cx.ba.size()); ++e) {
    bool above_atom = false;
    for (int i = 0; i < cx.ba.atoms; ++i)
      above_atom |= cx.ba.leq(Mask{1} << i, e);
    atomic_alg &= above_atom;
  }
  bool dense_int = space_int(x, space_cl(x, iso)) == x.carrier();
  bool dense = space_cl(x, iso) == x.carrier();
  pass &= atomic_alg == dense_int && dense_int == dense;
  r.pass = pass;
  r.detail = "atoms " + std::to_string(r.left_census) + ", isolated " +
             std::to_string(r.right_census);
  return r;
}

UVSum uv_sum(const FiniteSpace& x, const FiniteSpace& y) {
  if (!is_uv_space(x).ok() || !is_uv_space(y).ok())
    throw NotUVSpace("the UV-sum is defined for UV-spaces");
  UVSum s;
  s.nx = x.points();
  s.ny = y.points();
  long total = static_cast<long>(s.nx) + s.ny +
               static_cast<long>(s.nx) * s.ny;
  if (total > 63) throw SizeLimit("UV-sum carrier exceeds 63 points");
  int n = static_cast<int>(total);

  std::vector<Mask> gens;
  for (Mask u : coro(x))
    for (Mask v : coro(y)) {
      Mask g = 0;
      for (int p : mask_elems(u)) g |= Mask{1} << s.left_id(p);
      for (int q : mask_elems(v)) g |= Mask{1} << s.right_id(q);
      for (int p : mask_elems(u))
        for (int q : mask_elems(v)) g |= Mask{1} << s.pair_id(p, q);
      gens.push_back(g);
    }

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

  std::vector<std::string> labels(n);
  for (int p = 0; p < s.nx; ++p) labels[s.left_id(p)] = "l:" + x.order.label(p);
  for (int q = 0; q < s.ny; ++q)
    labels[s.right_id(q)] = "r:" + y.order.label(q);
  for (int p = 0; p < s.nx; ++p)
    for (int q = 0; q < s.ny; ++q)
      labels[s.pair_id(p, q)] =
          "(" + x.order.label(p) + "," + y.order.label(q) + ")";
  s.space = FiniteSpace{poset_from_up_rows(std::move(up), std::move(labels))};

  // The specialization order must match the five-clause description.
  auto expected_leq = [&](int p, int q) {
    bool pl = p < s.nx, ql = q < s.nx;
    bool pr = !pl && p < s.nx + s.ny, qr = !ql && q < s.nx + s.ny;
    auto pair_of = [&](int id) {
      int off = id - s.nx - s.ny;
      return std::pair<int, int>{off / s.ny, off % s.ny};
    };
    if (pl && ql) return x.order.leq(p, q);
    if (pr && qr) return y.order.leq(p - s.nx, q - s.nx);
    if (!pl && !pr) {
      auto [px, py] = pair_of(p);
      if (ql) return x.order.leq(px, q);
      if (qr) return y.order.leq(py, q - s.nx);
      auto [qx, qy] = pair_of(q);
      return x.order.leq(px, qx) && y.order.leq(py, qy);
    }
    return false;
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (s.space.order.leq(p, q) != expected_leq(p, q))
        throw CounterexampleError(
            "UV-sum specialization differs from the five clauses",
            R"({"theorem":"uv-sum-order"})");
  return s;
}

DictReport check_sum_product(const FiniteBA& a, const FiniteBA& b) {
  DualSpace da = uv_dual(a), db = uv_dual(b);
  UVSum sum = uv_sum(da.space, db.space);
  FiniteBA p = product_ba(a, b);
  DualSpace dp = uv_dual(p);

  DictReport r;
  r.row = "sum-product";
  r.left_census = sum.space.points();
  r.right_census = dp.space.points();
  if (r.left_census != r.right_census) {
    r.pass = false;
    return r;
  }

  // The comparison map: a filter of the product projects to a pair of
  // filters, at least one proper; improper projections collapse to the
  // surviving side.
  std::vector<int> h(dp.space.points());
  for (int i = 0; i < dp.space.points(); ++i) {
    Mask g = BAFilter{dp.point_filters[i]}.generator();
    auto [ga, gb] = product_split(a, b, g);
    if (gb == 0) {
      auto fa = filter_generated(a, Mask{1} << ga);
      h[i] = sum.left_id(da.point_of_filter(fa->elems));
    } else if (ga == 0) {
      auto fb = filter_generated(b, Mask{1} << gb);
      h[i] = sum.right_id(db.point_of_filter(fb->elems));
    } else {
      auto fa = filter_generated(a, Mask{1} << ga);
      auto fb = filter_generated(b, Mask{1} << gb);
      h[i] = sum.pair_id(da.point_of_filter(fa->elems),
                         db.point_of_filter(fb->elems));
    }
  }

  std::vector<char> seen(sum.space.points(), 0);
  bool pass = true;
  for (int v : h) {
    if (seen[v]) pass = false;
    seen[v] = 1;
  }
  for (char c : seen) pass &= c != 0;
  for (int i = 0; i < dp.space.points() && pass; ++i)
    for (int j = 0; j < dp.space.points(); ++j)
      if (dp.space.order.leq(i, j) != sum.space.order.leq(h[i], h[j])) {
        pass = false;
        break;
      }
  r.pass = pass;
  r.detail = "sum of duals vs dual of product";
  return r;
}

SplitWitness split_by_coro(const FiniteSpace& x, Mask u) {
  std::vector<Mask> family = coro(x);
  if (std::find(family.begin(), family.end(), u) == family.end())
    throw NotCORO("splitting needs a CORO set");
  Mask nu = neg_le(x.order, u);
  if (u == 0 || nu == 0)
    throw TrivialSplit("one side of the split is empty");

  SplitWitness w{subspace(x, u), subspace(x, nu), {}, {}, false};
  w.sum = uv_sum(w.inside.space, w.outside.space);
  if (w.sum.space.points() != x.points())
    throw CounterexampleError("split sum has the wrong size",
                              R"({"theorem":"split"})");

  w.map.resize(w.sum.space.points());
  for (int i = 0; i < w.sum.nx; ++i)
    w.map[w.sum.left_id(i)] = w.inside.to_parent[i];
  for (int j = 0; j < w.sum.ny; ++j)
    w.map[w.sum.right_id(j)] = w.outside.to_parent[j];
  for (int i = 0; i < w.sum.nx; ++i)
    for (int j = 0; j < w.sum.ny; ++j) {
      auto m = poset_meet(x.order, w.inside.to_parent[i],
                          w.outside.to_parent[j]);
      if (!m) throw NoMeet("split needs meets to exist");
      w.map[w.sum.pair_id(i, j)] = *m;
    }

  std::vector<char> seen(x.points(), 0);
  bool pass = true;
  for (int v : w.map) {
    if (seen[v]) pass = false;
    seen[v] = 1;
  }
  for (char c : seen) pass &= c != 0;
  for (int p = 0; p < w.sum.space.points() && pass; ++p)
    for (int q = 0; q < w.sum.space.points(); ++q)
      if (w.sum.space.order.leq(p, q) !=
          x.order.leq(w.map[p], w.map[q])) {
        pass = false;
        break;
      }
  if (!pass)
    throw CounterexampleError("split comparison map is not a homeomorphism",
                              R"({"theorem":"split"})");
  w.ok = true;
  return w;
}

FiniteBA canonical_extension(const FiniteSpace& x) {
  COROAlgebra cx = coro_algebra(x);  // NotUVSpace when not UV
  ROAlgebra full = ro_algebra(x.order);
  if (full.ba.atoms != cx.ba.atoms)
    throw CounterexampleError(
        "canonical extension differs from the CORO algebra at finite scale",
        R"({"theorem":"canonical-extension"})");
  return full.ba;
}

DictReport macneille(const FiniteSpace& x) {
  COROAlgebra cx = coro_algebra(x);
  DictReport r;
  r.row = "macneille";

  std::vector<BAIdeal> normal;
  for (const BAIdeal& ideal : enumerate_ideals(cx.ba))
    if (is_normal_ideal(cx.ba, ideal)) normal.push_back(ideal);
  std::vector<Mask> regulars = ro(x);
  r.left_census = static_cast<int>(normal.size());
  r.right_census = static_cast<int>(regulars.size());

  auto r_map = [&](const BAIdeal& ideal) {
    Mask out = 0;
    for (int c : mask_elems(ideal.elems)) out |= cx.sets[c];
    return out;
  };
  auto i_map = [&](Mask v) {
    Mask vstar = star(x, v);
    Mask upper = 0;
    for (Mask b = 0; b < static_cast<Mask>(cx.ba.size()); ++b)
      if (mask_subset(cx.sets[b], vstar))
        upper |= Mask{1} << cx.ba.complement(b);
    return BAIdeal{lower_bounds(cx.ba, upper)};
  };

  bool pass = true;
  std::vector<Mask> image;
  for (const BAIdeal& ideal : normal) {
    Mask v = r_map(ideal);
    image.push_back(v);
    pass &= std::find(regulars.begin(), regulars.end(), v) != regulars.end();
    pass &= i_map(v).elems == ideal.elems;
  }
  for (Mask v : regulars) {
    BAIdeal ideal = i_map(v);
    pass &= is_ideal(cx.ba, ideal.elems) && is_normal_ideal(cx.ba, ideal);
    pass &= r_map(ideal) == v;
  }
  sort_family(image);
  std::vector<Mask> sorted_ro = regulars;
  sort_family(sorted_ro);
  pass &= image == sorted_ro;
  r.pass = pass;
  r.detail = "normal ideals vs space-regular-opens";
  return r;
}

}  // namespace uvlab
