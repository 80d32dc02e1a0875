#include "uvlab/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "uvlab/errors.hpp"
#include "uvlab/kernels.hpp"

namespace uvlab {

Mask SpaceMap::image(Mask set) const {
  Mask out = 0;
  for (int x : mask_elems(set)) out |= Mask{1} << map[x];
  return out;
}

Mask SpaceMap::preimage(Mask set) const {
  Mask out = 0;
  for (int x = 0; x < dom.points(); ++x)
    if (mask_has(set, map[x])) out |= Mask{1} << x;
  return out;
}

std::vector<Mask> open_sets(const FiniteSpace& x) { return all_upsets(x.order); }

namespace {

Mask interior_in(const std::vector<Mask>& opens, Mask s) {
  Mask out = 0;
  for (Mask o : opens)
    if (mask_subset(o, s)) out |= o;
  return out;
}

Mask int_cl_in(const std::vector<Mask>& opens, Mask carrier, Mask s) {
  Mask cl = carrier & ~interior_in(opens, carrier & ~s);
  return interior_in(opens, cl);
}

}  // namespace

bool is_compact_subset(const FiniteSpace& x, Mask s) {
  // Finitely many points: the basic cover by minimal neighborhoods is its
  // own finite subcover.  Evaluated, not merely assumed.
  Mask cover = 0;
  for (int p : mask_elems(s)) cover |= x.order.up[p];
  return mask_subset(s, cover);
}

std::vector<Mask> co(const FiniteSpace& x) {
  std::vector<Mask> out;
  for (Mask u : open_sets(x))
    if (is_compact_subset(x, u)) out.push_back(u);
  return out;
}

Mask space_int(const FiniteSpace& x, Mask s) {
  Mask out = 0;
  for (Mask u : open_sets(x))
    if (mask_subset(u, s)) out |= u;
  return out;
}

Mask space_cl(const FiniteSpace& x, Mask s) {
  return x.carrier() & ~space_int(x, x.carrier() & ~s);
}

Mask star(const FiniteSpace& x, Mask u) {
  if (!x.is_open(u)) throw NotOpen("pseudocomplement needs an open set");
  Mask out = 0;
  for (Mask v : open_sets(x))
    if ((u & v) == 0) out |= v;
  return out;
}

std::vector<Mask> ro(const FiniteSpace& x) {
  std::vector<Mask> opens = open_sets(x);
  std::vector<Mask> out;
  for (Mask u : opens)
    if (int_cl_in(opens, x.carrier(), u) == u) out.push_back(u);
  return out;
}

std::vector<Mask> cro(const FiniteSpace& x) {
  std::vector<Mask> out;
  for (Mask u : ro(x))
    if (is_compact_subset(x, u)) out.push_back(u);
  return out;
}

std::vector<Mask> oro(const FiniteSpace& x) {
  std::vector<Mask> out;
  for (Mask u : open_sets(x))
    if (is_ro_upset(x.order, u)) out.push_back(u);
  return out;
}

std::vector<Mask> coro(const FiniteSpace& x) {
  std::vector<Mask> out;
  for (Mask u : co(x))
    if (is_ro_upset(x.order, u)) out.push_back(u);
  return out;
}

bool verify_alexandroff(const FiniteSpace& x) {
  if (x.points() > 14) throw SizeLimit("exhaustive identity check refused");
  std::vector<Mask> opens = open_sets(x);
  for (Mask s = 0; s <= x.carrier(); ++s) {
    if (interior_in(opens, s) != int_le(x.order, s)) return false;
    Mask cl = x.carrier() & ~interior_in(opens, x.carrier() & ~s);
    if (cl != cl_le(x.order, s)) return false;
    if (s == x.carrier()) break;
  }
  return true;
}

FiniteLattice open_set_lattice(const FiniteSpace& x,
                               std::vector<Mask>* opens_out) {
  std::vector<Mask> opens = open_sets(x);
  int n = static_cast<int>(opens.size());
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i * n + j] = mask_subset(opens[i], opens[j]) ? 1 : 0;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "O" + std::to_string(i);
  if (opens_out) *opens_out = opens;
  return lattice_from_order(n, leq, std::move(labels));
}

SpectralReport is_spectral(const FiniteSpace& x) {
  SpectralReport r;
  std::vector<Mask> opens = open_sets(x);

  r.compact = is_compact_subset(x, x.carrier());
  if (!r.compact) r.failures.push_back("carrier is not compact");

  r.t0 = true;
  for (int a = 0; a < x.points() && r.t0; ++a)
    for (int b = a + 1; b < x.points() && r.t0; ++b) {
      bool separated = false;
      for (Mask u : opens)
        if (mask_has(u, a) != mask_has(u, b)) {
          separated = true;
          break;
        }
      if (!separated) {
        r.t0 = false;
        r.failures.push_back("points " + std::to_string(a) + " and " +
                             std::to_string(b) + " are not T0-separated");
      }
    }

  std::vector<Mask> cos = co(x);
  std::vector<Mask> co_sorted = cos;
  std::sort(co_sorted.begin(), co_sorted.end());
  auto in_co = [&](Mask s) {
    return std::binary_search(co_sorted.begin(), co_sorted.end(), s);
  };

  // Pairwise checks are exhaustive up to this family size; past it a
  // seeded deterministic subsample keeps giant carriers usable.
  constexpr std::size_t kFullPairCap = 20000;
  r.coherent_intersections = true;
  if (cos.size() <= kFullPairCap) {
    for (std::size_t i = 0; i < cos.size() && r.coherent_intersections; ++i)
      for (std::size_t j = i; j < cos.size(); ++j)
        if (!in_co(cos[i] & cos[j])) {
          r.coherent_intersections = false;
          r.failures.push_back("compact opens are not closed under meet");
          break;
        }
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int t = 0; t < 1'000'000 && r.coherent_intersections; ++t) {
      Mask u = cos[next() % cos.size()], v = cos[next() % cos.size()];
      if (!in_co(u & v)) {
        r.coherent_intersections = false;
        r.failures.push_back("compact opens are not closed under meet");
      }
    }
    r.failures.push_back(
        "note: meet closure checked on a sample of the compact opens");
  }

  r.coherent_base = true;
  for (Mask u : opens) {
    if (in_co(u)) continue;  // the set itself witnesses the cover
    Mask covered = 0;
    for (Mask v : cos)
      if (mask_subset(v, u)) covered |= v;
    if (covered != u) {
      r.coherent_base = false;
      r.failures.push_back("compact opens are not a base");
      break;
    }
  }

  // Sobriety: every completely prime filter of the open-set lattice must
  // be the neighborhood filter of a point.  Small lattices run through the
  // lattice module (which doubles as its self-test); larger ones use
  // join-irreducibility on the family directly.
  r.sober = true;
  if (opens.size() <= 256) {
    std::vector<Mask> lattice_opens;
    FiniteLattice l = open_set_lattice(x, &lattice_opens);
    for (int g : completely_prime_generators(l)) {
      if (!is_completely_prime_upset(l, g))
        throw std::logic_error("join-irreducible generator is not prime");
      bool matched = false;
      for (int p = 0; p < x.points(); ++p)
        if (lattice_opens[g] == x.order.up[p]) {
          matched = true;
          break;
        }
      if (!matched) {
        r.sober = false;
        r.failures.push_back("completely prime filter at open " +
                             std::to_string(lattice_opens[g]) +
                             " is not a point's neighborhood filter");
      }
    }
  } else if (opens.size() <= kFullPairCap) {
    for (Mask u : opens) {
      if (u == 0) continue;
      Mask joined = 0;
      for (Mask v : opens)
        if (v != u && mask_subset(v, u)) joined |= v;
      if (joined == u) continue;  // join-reducible
      bool matched = false;
      for (int p = 0; p < x.points(); ++p)
        if (u == x.order.up[p]) {
          matched = true;
          break;
        }
      if (!matched) {
        r.sober = false;
        r.failures.push_back("a completely prime filter matches no point");
        break;
      }
    }
  } else {
    // Join-irreducible upsets are those with one minimal element; each
    // must then be that element's principal upset.
    for (Mask u : opens) {
      if (u == 0) continue;
      Mask mins = 0;
      for (int p : mask_elems(u))
        if ((x.order.down_row(p) & u) == (Mask{1} << p)) mins |= Mask{1} << p;
      if (mask_size(mins) != 1) continue;
      if (u != x.order.up[mask_min(mins)]) {
        r.sober = false;
        r.failures.push_back("a completely prime filter matches no point");
        break;
      }
    }
    r.failures.push_back(
        "note: sobriety used the unique-minimal characterization");
  }
  return r;
}

// ---- UV-space -------------------------------------------------------------

namespace {

// Proper filters of the CORO family when it is closed under intersection:
// every filter of a finite meet-semilattice is the principal upset of its
// least member.
std::vector<std::vector<int>> principal_family_filters(
    const std::vector<Mask>& family) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == 0) continue;
    std::vector<int> up;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (mask_subset(family[i], family[j])) up.push_back(static_cast<int>(j));
    out.push_back(std::move(up));
  }
  return out;
}

}  // namespace

UVReport is_uv_space(const FiniteSpace& x) {
  UVReport r;
  const Poset& p = x.order;

  r.t0 = true;  // the representation is a poset; antisymmetry is T0 here
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (a != b && p.leq(a, b) && p.leq(b, a)) r.t0 = false;
  if (!r.t0) r.failures.push_back("not T0");

  std::vector<Mask> family = coro(x);
  std::unordered_set<Mask> fam_set(family.begin(), family.end());

  r.inter_closed = true;
  for (Mask u : family) {
    for (Mask v : family)
      if (!fam_set.count(u & v)) {
        r.inter_closed = false;
        break;
      }
    if (!r.inter_closed) break;
  }
  if (!r.inter_closed)
    r.failures.push_back("CORO family is not closed under intersection");

  r.neg_closed = true;
  for (Mask u : family)
    if (!fam_set.count(neg_le(p, u))) {
      r.neg_closed = false;
      r.failures.push_back("CORO family is not closed under neg");
      break;
    }

  r.basis = true;
  for (Mask o : open_sets(x)) {
    Mask covered = 0;
    for (Mask u : family)
      if (mask_subset(u, o)) covered |= u;
    if (covered != o) {
      r.basis = false;
      r.failures.push_back("CORO family is not a basis");
      break;
    }
  }

  // Filter realization: every proper filter of the family must be CORO(x)
  // for a point x.
  std::vector<std::vector<int>> member_ids(p.n);
  for (int q = 0; q < p.n; ++q)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (mask_has(family[j], q)) member_ids[q].push_back(static_cast<int>(j));

  if (r.inter_closed) {
    r.filters_realized = true;
    for (const auto& filt : principal_family_filters(family)) {
      bool matched = false;
      for (int q = 0; q < p.n && !matched; ++q) matched = member_ids[q] == filt;
      if (!matched) {
        r.filters_realized = false;
        r.failures.push_back("a proper CORO filter is realized at no point");
        break;
      }
    }
  } else if (family.size() <= 16) {
    // Without meet closure, fall back to the literal subset sweep.
    r.filters_realized = true;
    std::size_t m = family.size();
    for (Mask sub = 1; sub < (Mask{1} << m); ++sub) {
      std::vector<int> ids = mask_elems(sub);
      bool filter = true;
      for (int i : ids) {
        if (family[i] == 0) filter = false;
        for (std::size_t j = 0; j < m; ++j)
          if (mask_subset(family[i], family[j]) && !mask_has(sub, (int)j))
            filter = false;
        for (int j : ids) {
          Mask met = family[i] & family[j];
          auto it = std::find(family.begin(), family.end(), met);
          if (it != family.end() &&
              !mask_has(sub, (int)(it - family.begin())))
            filter = false;
        }
      }
      if (!filter) continue;
      bool matched = false;
      for (int q = 0; q < p.n && !matched; ++q)
        matched = member_ids[q] == ids;
      if (!matched) {
        r.filters_realized = false;
        r.failures.push_back("a proper CORO filter is realized at no point");
        break;
      }
    }
  } else {
    r.filters_realized = false;
    r.failures.push_back(
        "filter realization not evaluated: family is large and not "
        "meet-closed");
  }
  return r;
}

COROAlgebra coro_algebra(const FiniteSpace& x) {
  UVReport r = is_uv_space(x);
  if (!r.ok()) {
    std::string why;
    for (const auto& f : r.failures) why += (why.empty() ? "" : "; ") + f;
    throw NotUVSpace(why.empty() ? "space is not a UV-space" : why);
  }
  std::vector<Mask> family = coro(x);

  // Atoms of the family: minimal nonempty members.
  std::vector<Mask> atoms;
  for (Mask u : family) {
    if (u == 0) continue;
    bool minimal = true;
    for (Mask v : family)
      if (v != 0 && v != u && mask_subset(v, u)) minimal = false;
    if (minimal) atoms.push_back(u);
  }
  int k = static_cast<int>(atoms.size());
  if ((std::size_t{1} << k) != family.size())
    throw CounterexampleError(
        "CORO family of a UV-space is not atom-coordinatizable",
        R"({"theorem":"coro-algebra"})");

  COROAlgebra out;
  out.ba.atoms = k;
  out.ba.origin = "coro";
  out.ba.atom_labels.resize(k);
  out.sets.resize(std::size_t{1} << k);
  for (int i = 0; i < k; ++i) {
    std::string l = "{";
    for (int q : mask_elems(atoms[i])) {
      if (l.size() > 1) l += ",";
      l += x.order.label(q);
    }
    out.ba.atom_labels[i] = l + "}";
  }
  std::unordered_set<Mask> fam_set(family.begin(), family.end());
  for (Mask e = 0; e < (Mask{1} << k); ++e) {
    Mask uni = 0;
    for (int i : mask_elems(e)) uni |= atoms[i];
    Mask set = int_le(x.order, cl_le(x.order, uni));
    if (!fam_set.count(set))
      throw CounterexampleError("join of CORO atoms left the family",
                                R"({"theorem":"coro-algebra"})");
    out.sets[e] = set;
  }
  // The operation laws of the regular-open algebra, checked on the family.
  for (Mask a = 0; a < (Mask{1} << k); ++a) {
    if (out.sets[out.ba.complement(a)] != neg_le(x.order, out.sets[a]))
      throw CounterexampleError("complement law failed on the CORO algebra",
                                R"({"theorem":"coro-algebra"})");
    for (Mask b = 0; b < (Mask{1} << k); ++b) {
      if (out.sets[a & b] != (out.sets[a] & out.sets[b]))
        throw CounterexampleError("meet law failed on the CORO algebra",
                                  R"({"theorem":"coro-algebra"})");
      if (out.sets[a | b] !=
          int_le(x.order, cl_le(x.order, out.sets[a] | out.sets[b])))
        throw CounterexampleError("join law failed on the CORO algebra",
                                  R"({"theorem":"coro-algebra"})");
    }
  }
  // Bijectivity onto the family.
  std::unordered_set<Mask> image(out.sets.begin(), out.sets.end());
  if (image.size() != family.size())
    throw CounterexampleError("CORO algebra element sets are not distinct",
                              R"({"theorem":"coro-algebra"})");
  out.ba.element_sets = out.sets;
  return out;
}

Mask COROAlgebra::element_of(Mask s) const {
  for (std::size_t e = 0; e < sets.size(); ++e)
    if (sets[e] == s) return static_cast<Mask>(e);
  throw UnknownElement("point set is not a CORO algebra element");
}

std::vector<Mask> coro_at(const FiniteSpace& x, int point) {
  if (point < 0 || point >= x.points())
    throw UnknownElement("point id out of range");
  std::vector<Mask> out;
  for (Mask u : coro(x))
    if (mask_has(u, point)) out.push_back(u);
  return out;
}

int meet_point(const FiniteSpace& x, int a, int b) {
  if (a < 0 || a >= x.points() || b < 0 || b >= x.points())
    throw UnknownElement("point id out of range");
  // Meets are total on UV-spaces; a missing one is itself the signal that
  // the space is not UV (the axiom-fuzzing use), so no eager validation.
  auto m = poset_meet(x.order, a, b);
  if (!m) throw NoMeet("points have no greatest lower bound");
  return *m;
}

std::pair<int, int> decompose(const FiniteSpace& x, Mask u, int z) {
  std::vector<Mask> family = coro(x);
  if (std::find(family.begin(), family.end(), u) == family.end())
    throw NotCORO("decomposition needs a CORO set");
  if (!is_uv_space(x).ok()) throw NotUVSpace("decompose needs a UV-space");
  Mask nu = neg_le(x.order, u);
  std::vector<std::pair<int, int>> hits;
  for (int p : mask_elems(u))
    for (int q : mask_elems(nu)) {
      auto m = poset_meet(x.order, p, q);
      if (m && *m == z) hits.emplace_back(p, q);
    }
  if (hits.empty())
    throw NoWitness("no pair in U x negU meets to the given point");
  if (hits.size() > 1)
    throw CounterexampleError("meet decomposition is not unique",
                              R"({"theorem":"decompose"})");
  return hits[0];
}

Mask join_coro(const FiniteSpace& x, Mask u, Mask v) {
  std::vector<Mask> family = coro(x);
  auto in_family = [&](Mask s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  if (!in_family(u) || !in_family(v)) throw NotCORO("join needs CORO sets");
  Mask j1 = int_le(x.order, cl_le(x.order, u | v));
  Mask j2 = join_via_meets(x, u, v);
  if (j1 != j2)
    throw CounterexampleError("the two join formulas disagree",
                              R"({"theorem":"join-coro"})");
  return j1;
}

Mask join_via_meets(const FiniteSpace& x, Mask u, Mask v) {
  Mask out = u | v;
  for (int p : mask_elems(u))
    for (int q : mask_elems(v)) {
      auto m = poset_meet(x.order, p, q);
      if (!m) throw NoMeet("points have no greatest lower bound");
      out |= Mask{1} << *m;
    }
  return out;
}

SubspaceResult subspace(const FiniteSpace& x, Mask u) {
  std::vector<Mask> family = coro(x);
  if (std::find(family.begin(), family.end(), u) == family.end())
    throw NotCORO("subspace needs a CORO set");
  auto [order, to_parent] = x.order.restrict(u);
  SubspaceResult out{FiniteSpace{std::move(order)}, std::move(to_parent)};

  if (u != 0) {
    if (!is_uv_space(out.space).ok())
      throw CounterexampleError("CORO subspace is not a UV-space",
                                R"({"theorem":"subspace"})");
    // CORO of the subspace must be exactly the traces of CORO(X).
    std::vector<int> new_id(x.points(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
      new_id[out.to_parent[i]] = static_cast<int>(i);
    std::vector<Mask> traces;
    for (Mask v : family) {
      Mask t = 0;
      for (int p : mask_elems(v & u)) t |= Mask{1} << new_id[p];
      traces.push_back(t);
    }
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    std::vector<Mask> sub_family = coro(out.space);
    std::sort(sub_family.begin(), sub_family.end());
    if (traces != sub_family)
      throw CounterexampleError("CORO of subspace differs from traces",
                                R"({"theorem":"subspace"})");
  }
  return out;
}

Mask isolated_points(const FiniteSpace& x) {
  Mask out = 0;
  for (int p = 0; p < x.points(); ++p)
    if (x.order.up[p] == (Mask{1} << p)) out |= Mask{1} << p;
  return out;
}

bool is_complete_uv(const FiniteSpace& x) {
  std::vector<Mask> family = coro(x);
  std::unordered_set<Mask> fam_set(family.begin(), family.end());
  std::vector<Mask> opens = open_sets(x);
  for (Mask o : opens)
    if (!fam_set.count(int_cl_in(opens, x.carrier(), o))) return false;
  return true;
}

bool is_spectral_map(const SpaceMap& f) {
  if (f.map.size() != static_cast<std::size_t>(f.dom.points())) return false;
  for (int y : f.map)
    if (y < 0 || y >= f.cod.points()) return false;
  std::vector<Mask> dom_co = co(f.dom);
  std::unordered_set<Mask> dom_co_set(dom_co.begin(), dom_co.end());
  for (Mask u : co(f.cod))
    if (!dom_co_set.count(f.preimage(u))) return false;
  return true;
}

bool is_uv_map(const SpaceMap& f) {
  if (!is_spectral_map(f)) return false;
  for (int x = 0; x < f.dom.points(); ++x)
    for (int y2 : mask_elems(f.cod.order.up[f.map[x]])) {
      bool lifted = false;
      for (int y : mask_elems(f.dom.order.up[x]))
        if (f.map[y] == y2) {
          lifted = true;
          break;
        }
      if (!lifted) return false;
    }
  return true;
}

bool is_uv_embedding(const SpaceMap& f) {
  if (!is_uv_map(f)) return false;
  std::vector<char> seen(f.cod.points(), 0);
  for (int y : f.map) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  Mask image_all = f.image(f.dom.carrier());
  std::vector<Mask> cod_coro = coro(f.cod);
  for (Mask u : coro(f.dom)) {
    bool representable = false;
    for (Mask v : cod_coro)
      if (f.image(u) == (image_all & v)) {
        representable = true;
        break;
      }
    if (!representable) return false;
  }
  return true;
}

bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  // Finite spaces are Alexandroff: homeomorphism is isomorphism of the
  // specialization orders.
  return order_isomorphic(a.order, b.order);
}

}  // namespace uvlab
