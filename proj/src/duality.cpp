#include "uvlab/duality.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "uvlab/errors.hpp"

namespace uvlab {

using nlohmann::json;

int DualSpace::point_of_filter(Mask filter_elems) const {
  for (std::size_t i = 0; i < point_filters.size(); ++i)
    if (point_filters[i] == filter_elems) return static_cast<int>(i);
  throw UnknownElement("no point with the given filter");
}

namespace {

std::string payload_for_ba(const std::string& theorem, const FiniteBA& a,
                           const std::string& detail) {
  json j;
  j["theorem"] = theorem;
  j["instance"] = {{"kind", "ba"}, {"atoms", a.atoms}};
  j["detail"] = detail;
  return j.dump();
}

}  // namespace

DualSpace uv_dual(const FiniteBA& a) {
  if (a.degenerate())
    throw DegenerateBA("the dual space needs a proper filter to exist");
  std::vector<BAFilter> filters = enumerate_proper_filters(a);
  int n = static_cast<int>(filters.size());

  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mask_subset(filters[i].elems, filters[j].elems))
        up[i] |= Mask{1} << j;

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = "up(" + a.element_name(filters[i].generator()) + ")";

  DualSpace d;
  d.space = FiniteSpace{poset_from_up_rows(std::move(up), std::move(labels))};
  d.algebra = a;
  d.point_filters.resize(n);
  for (int i = 0; i < n; ++i) d.point_filters[i] = filters[i].elems;

  // Finite shortcut used as a mutual oracle: the generators must exhaust
  // the nonzero elements and reverse the algebra order.
  {
    std::vector<char> seen(a.size(), 0);
    for (int i = 0; i < n; ++i) {
      Mask g = filters[i].generator();
      if (g == 0 || seen[g])
        throw CounterexampleError(
            "filter enumeration disagrees with the principal shortcut",
            payload_for_ba("dual-shortcut", a, "generator repetition or 0"));
      seen[g] = 1;
    }
    if (n != a.size() - 1)
      throw CounterexampleError(
          "filter count differs from the nonzero element count",
          payload_for_ba("dual-shortcut", a, std::to_string(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool incl = mask_subset(d.point_filters[i], d.point_filters[j]);
        bool rev = a.leq(filters[j].generator(), filters[i].generator());
        if (incl != rev)
          throw CounterexampleError(
              "specialization order is not reversed algebra order",
              payload_for_ba("dual-shortcut", a,
                             std::to_string(i) + "," + std::to_string(j)));
      }
  }

  SpectralReport sr = is_spectral(d.space);
  if (!sr.ok())
    throw CounterexampleError("dual space is not spectral",
                              payload_for_ba("dual-spectral", a,
                                             sr.failures.empty()
                                                 ? "unknown clause"
                                                 : sr.failures.front()));
  UVReport ur = is_uv_space(d.space);
  if (!ur.ok())
    throw CounterexampleError("dual space is not a UV-space",
                              payload_for_ba("dual-uv", a,
                                             ur.failures.empty()
                                                 ? "unknown clause"
                                                 : ur.failures.front()));
  return d;
}

Mask hat(const DualSpace& d, Mask element) {
  d.algebra.check_element(element);
  Mask out = 0;
  for (std::size_t i = 0; i < d.point_filters.size(); ++i)
    if (mask_has(d.point_filters[i], (int)element)) out |= Mask{1} << i;
  return out;
}

RepresentationReport check_representation(const FiniteBA& a) {
  DualSpace d = uv_dual(a);
  const Poset& p = d.space.order;

  RepresentationReport rep;
  rep.atoms = a.atoms;
  rep.iso.resize(a.size());
  for (Mask e = 0; e < static_cast<Mask>(a.size()); ++e)
    rep.iso[e] = hat(d, e);

  // hat must be injective and land exactly on the CORO family.
  std::vector<Mask> hats(rep.iso.begin(), rep.iso.end());
  sort_family(hats);
  if (std::adjacent_find(hats.begin(), hats.end()) != hats.end())
    throw CounterexampleError(
        "hat map is not injective",
        payload_for_ba("representation", a, "duplicate hat set"));
  std::vector<Mask> family = coro(d.space);
  if (hats != family)
    throw CounterexampleError(
        "hat image differs from the CORO family",
        payload_for_ba("representation", a, "family mismatch"));

  for (Mask x = 0; x < static_cast<Mask>(a.size()); ++x) {
    for (Mask y = 0; y < static_cast<Mask>(a.size()); ++y) {
      if (a.leq(x, y) != mask_subset(rep.iso[x], rep.iso[y]))
        throw CounterexampleError(
            "hat does not preserve and reflect order",
            payload_for_ba("representation", a,
                           "order witness (" + a.element_name(x) + ", " +
                               a.element_name(y) + ")"));
      if (rep.iso[a.meet(x, y)] != (rep.iso[x] & rep.iso[y]))
        throw CounterexampleError(
            "meet equation failed",
            payload_for_ba("representation", a,
                           "meet witness (" + a.element_name(x) + ", " +
                               a.element_name(y) + ")"));
      if (rep.iso[a.join(x, y)] !=
          int_le(p, cl_le(p, rep.iso[x] | rep.iso[y])))
        throw CounterexampleError(
            "join equation failed",
            payload_for_ba("representation", a,
                           "join witness (" + a.element_name(x) + ", " +
                               a.element_name(y) + ")"));
    }
    if (rep.iso[a.complement(x)] != neg_le(p, rep.iso[x]))
      throw CounterexampleError(
          "complement equation failed",
          payload_for_ba("representation", a,
                         "complement witness " + a.element_name(x)));
  }
  rep.ok = true;
  return rep;
}

EpsilonResult epsilon(const FiniteSpace& x) {
  COROAlgebra c = coro_algebra(x);  // NotUVSpace when the axioms fail
  EpsilonResult out{uv_dual(c.ba), SpaceMap{}};
  out.map.dom = x;
  out.map.cod = out.dual.space;
  out.map.map.resize(x.points());
  for (int q = 0; q < x.points(); ++q) {
    Mask filt = 0;
    for (std::size_t e = 0; e < c.sets.size(); ++e)
      if (mask_has(c.sets[e], q)) filt |= Mask{1} << e;
    out.map.map[q] = out.dual.point_of_filter(filt);
  }

  // Homeomorphism: bijective and an order isomorphism both ways.
  if (x.points() != out.dual.space.points())
    throw CounterexampleError("epsilon is not bijective",
                              R"({"theorem":"epsilon"})");
  std::vector<char> seen(x.points(), 0);
  for (int v : out.map.map) seen[v] = 1;
  for (char s : seen)
    if (!s)
      throw CounterexampleError("epsilon is not surjective",
                                R"({"theorem":"epsilon"})");
  for (int u = 0; u < x.points(); ++u)
    for (int v = 0; v < x.points(); ++v)
      if (x.order.leq(u, v) !=
          out.dual.space.order.leq(out.map.map[u], out.map.map[v]))
        throw CounterexampleError("epsilon is not an order isomorphism",
                                  R"({"theorem":"epsilon"})");
  return out;
}

DualHomResult dual_hom(const BAHom& h) {
  if (!is_homomorphism(h))
    throw NotAHomomorphism("dualizing needs a homomorphism");
  DualHomResult out{uv_dual(h.dom), uv_dual(h.cod), SpaceMap{}};
  out.map.dom = out.cod_dual.space;
  out.map.cod = out.dom_dual.space;
  out.map.map.resize(out.cod_dual.space.points());
  for (int i = 0; i < out.cod_dual.space.points(); ++i) {
    Mask pre = 0;
    for (Mask a = 0; a < static_cast<Mask>(h.dom.size()); ++a)
      if (mask_has(out.cod_dual.point_filters[i], (int)h.map[a]))
        pre |= Mask{1} << a;
    out.map.map[i] = out.dom_dual.point_of_filter(pre);
  }
  if (!is_uv_map(out.map))
    throw CounterexampleError("dual of a homomorphism is not a UV-map",
                              R"({"theorem":"dual-hom"})");
  return out;
}

BAHom dual_map(const SpaceMap& f) {
  if (!is_uv_map(f)) throw NotAUVMap("dualizing needs a UV-map");
  COROAlgebra cx = coro_algebra(f.dom);
  COROAlgebra cy = coro_algebra(f.cod);
  BAHom h{cy.ba, cx.ba, {}};
  h.map.resize(cy.ba.size());
  for (Mask v = 0; v < static_cast<Mask>(cy.ba.size()); ++v) {
    Mask pre = f.preimage(cy.sets[v]);
    h.map[v] = cx.element_of(pre);  // UV-maps pull CORO back to CORO
  }
  if (!is_homomorphism(h))
    throw CounterexampleError("dual of a UV-map is not a homomorphism",
                              R"({"theorem":"dual-map"})");
  return h;
}

bool check_squares(const BAHom& h) {
  if (!is_homomorphism(h))
    throw NotAHomomorphism("commuting square needs a homomorphism");
  DualHomResult dh = dual_hom(h);
  BAHom round = dual_map(dh.map);  // coro(dual dom) -> coro(dual cod)
  COROAlgebra ca = coro_algebra(dh.dom_dual.space);
  COROAlgebra cb = coro_algebra(dh.cod_dual.space);
  for (Mask a = 0; a < static_cast<Mask>(h.dom.size()); ++a) {
    Mask iso_a = ca.element_of(hat(dh.dom_dual, a));
    Mask lhs = round.map[iso_a];
    Mask rhs = cb.element_of(hat(dh.cod_dual, h.map[a]));
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_squares_space(const SpaceMap& f) {
  if (!is_uv_map(f)) throw NotAUVMap("commuting square needs a UV-map");
  EpsilonResult ex = epsilon(f.dom);
  EpsilonResult ey = epsilon(f.cod);
  BAHom fplus = dual_map(f);
  DualHomResult round = dual_hom(fplus);  // map: UV(coro X) -> UV(coro Y)
  for (int x = 0; x < f.dom.points(); ++x) {
    // The dual spaces built inside epsilon and dual_hom come from equal
    // algebras; point identity is transported through the filters.
    Mask filt = ex.dual.point_filters[ex.map.map[x]];
    int lhs = round.map.map[round.cod_dual.point_of_filter(filt)];
    Mask lhs_filter = round.dom_dual.point_filters[lhs];
    Mask rhs_filter = ey.dual.point_filters[ey.map.map[f.map[x]]];
    if (lhs_filter != rhs_filter) return false;
  }
  return true;
}

InjSurjReport check_injective_surjective_duality(const BAHom& h) {
  if (!is_homomorphism(h))
    throw NotAHomomorphism("duality facts need a homomorphism");
  InjSurjReport r;
  DualHomResult dh = dual_hom(h);
  const SpaceMap& f = dh.map;

  r.ok = true;
  r.h_injective = is_injective(h);
  if (r.h_injective) {
    std::vector<char> seen(f.cod.points(), 0);
    for (int v : f.map) seen[v] = 1;
    bool surj = std::all_of(seen.begin(), seen.end(),
                            [](char c) { return c != 0; });
    r.dual_surjective_checked = surj;
    r.ok &= surj;
  }
  r.h_surjective = is_surjective(h);
  if (r.h_surjective) {
    bool emb = is_uv_embedding(f);
    r.dual_embedding_checked = emb;
    r.ok &= emb;
  }

  BAHom fplus = dual_map(f);
  {
    std::vector<char> seen(f.cod.points(), 0);
    for (int v : f.map) seen[v] = 1;
    r.map_surjective = std::all_of(seen.begin(), seen.end(),
                                   [](char c) { return c != 0; });
  }
  if (r.map_surjective) {
    bool inj = is_injective(fplus);
    r.dual_injective_checked = inj;
    r.ok &= inj;
  }
  r.map_embedding = is_uv_embedding(f);
  if (r.map_embedding) {
    bool surj = is_surjective(fplus);
    r.dual_surjective2_checked = surj;
    r.ok &= surj;
  }
  return r;
}

}  // namespace uvlab
