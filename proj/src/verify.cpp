#include "uvlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "uvlab/applications.hpp"
#include "uvlab/dictionary.hpp"
#include "uvlab/duality.hpp"
#include "uvlab/enumerate.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/hyperlocale.hpp"
#include "uvlab/limits.hpp"

namespace uvlab {

using nlohmann::json;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() -
                                              t0)
      .count();
}

Poset fast_poset(const std::vector<Mask>& up) {
  Poset p;
  p.n = static_cast<int>(up.size());
  p.up = up;
  return p;
}

json poset_instance(const std::vector<Mask>& up) {
  json j;
  j["kind"] = "poset";
  j["up"] = up;
  return j;
}

std::string make_payload(const std::string& theorem, const json& instance,
                         const std::string& detail) {
  json j;
  j["theorem"] = theorem;
  j["instance"] = instance;
  j["detail"] = detail;
  return j.dump();
}

[[noreturn]] void fail(const std::string& theorem, const json& instance,
                       const std::string& detail) {
  throw CounterexampleError(theorem + ": " + detail,
                            make_payload(theorem, instance, detail));
}

// Runs `body` and folds it into a record.  The body throws
// CounterexampleError (carrying a payload) on failure.
InstanceRecord run_record(const std::string& theorem,
                          const std::string& instance,
                          const std::function<std::uint64_t()>& body) {
  InstanceRecord rec;
  rec.theorem = theorem;
  rec.instance = instance;
  auto t0 = chrono::steady_clock::now();
  try {
    rec.checked = body();
    rec.pass = true;
  } catch (const CounterexampleError& e) {
    rec.pass = false;
    rec.detail = e.what();
    rec.payload = e.payload();
  }
  rec.millis = ms_since(t0);
  return rec;
}

// ---- deterministic labeled-poset sweeps ----------------------------------

struct SweepFailure {
  std::vector<Mask> up;
  std::string detail;

  bool operator<(const SweepFailure& other) const { return up < other.up; }
};

// Runs `check` over every labeled poset on n elements, splitting the DFS
// across jobs by the first successor row; results merge deterministically.
// `check` throws CounterexampleError to report a failure.
std::uint64_t sweep_posets(int n, int jobs,
                           const std::function<void(const std::vector<Mask>&)>&
                               check,
                           std::vector<SweepFailure>* failures,
                           std::uint64_t sample = 0,
                           std::uint64_t seed = 0) {
  std::uint64_t total = sample ? count_labeled_posets(n) : 0;
  auto sampled_out = [&](std::uint64_t index) {
    if (!sample || total <= sample) return false;
    // splitmix-style hash for a deterministic, seed-driven subsample
    std::uint64_t z = index + seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return (z % total) >= sample;
  };

  jobs = std::max(1, jobs);
  std::vector<std::vector<SweepFailure>> fails(jobs);
  std::vector<std::uint64_t> counts(jobs, 0);

  // First-row candidates partition the search space.
  std::vector<Mask> first;
  for (Mask row = 0; row < (Mask{1} << n); ++row)
    if (row & 1) first.push_back(row);

  auto worker = [&](int tid) {
    struct Dfs {
      int n;
      const std::function<void(const std::vector<Mask>&)>& check;
      std::vector<Mask> up;
      std::uint64_t index = 0;
      std::uint64_t done = 0;
      std::vector<SweepFailure>& out;
      const std::function<bool(std::uint64_t)>& skip;

      bool consistent(int i) const {
        for (int j = 0; j < i; ++j) {
          bool ij = mask_has(up[i], j), ji = mask_has(up[j], i);
          if (ij && ji) return false;
          if (ij && (up[j] & ~up[i])) return false;
          if (ji && (up[i] & ~up[j])) return false;
        }
        return true;
      }
      void run(int i, bool count_only) {
        if (i == n) {
          if (!count_only) {
            if (!skip(index)) {
              ++done;
              try {
                check(up);
              } catch (const CounterexampleError& e) {
                out.push_back(SweepFailure{up, e.what()});
              }
            }
          }
          ++index;
          return;
        }
        Mask self = Mask{1} << i;
        for (Mask row = 0; row < (Mask{1} << n); ++row) {
          if (!(row & self)) continue;
          up[i] = row;
          if (consistent(i)) run(i + 1, count_only);
        }
        up[i] = 0;
      }
    };
    std::function<bool(std::uint64_t)> skip = sampled_out;
    Dfs dfs{n, check, std::vector<Mask>(n, 0), 0, 0, fails[tid], skip};
    // Each worker owns a strided share of the first-row candidates; the
    // failure index stream stays deterministic because indices are local
    // to (tid, first-row) blocks only when sampling is off.  With sampling
    // on, a single worker keeps the index stream global and exact.
    if (sample) {
      if (tid == 0) dfs.run(0, false);
    } else {
      for (std::size_t f = tid; f < first.size();
           f += static_cast<std::size_t>(jobs)) {
        dfs.up[0] = first[f];
        if (dfs.consistent(0)) dfs.run(1, false);
      }
    }
    counts[tid] = dfs.done;
  };

  if (n == 1) {
    // single poset; run inline
    std::vector<Mask> up{Mask{1}};
    std::uint64_t done = 0;
    if (!sampled_out(0)) {
      ++done;
      try {
        check(up);
      } catch (const CounterexampleError& e) {
        fails[0].push_back(SweepFailure{up, e.what()});
      }
    }
    counts[0] = done;
  } else if (jobs == 1 || sample) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& t : threads) t.join();
  }

  std::uint64_t done = 0;
  for (auto c : counts) done += c;
  std::vector<SweepFailure> all;
  for (auto& f : fails)
    for (auto& x : f) all.push_back(std::move(x));
  std::sort(all.begin(), all.end());
  *failures = std::move(all);
  return done;
}

InstanceRecord sweep_record(const std::string& theorem, int n, int jobs,
                            const std::function<void(const std::vector<Mask>&)>&
                                check,
                            std::uint64_t sample = 0, std::uint64_t seed = 0) {
  InstanceRecord rec;
  rec.theorem = theorem;
  rec.instance = "labeled posets, n=" + std::to_string(n) +
                 (sample ? " (sampled)" : "");
  auto t0 = chrono::steady_clock::now();
  std::vector<SweepFailure> failures;
  rec.checked = sweep_posets(n, jobs, check, &failures, sample, seed);
  if (failures.empty()) {
    rec.pass = true;
  } else {
    rec.pass = false;
    rec.detail = failures.front().detail + " (+" +
                 std::to_string(failures.size() - 1) + " more)";
    rec.payload =
        make_payload(theorem, poset_instance(failures.front().up),
                     failures.front().detail);
  }
  rec.millis = ms_since(t0);
  return rec;
}

// ---- individual theorem checks -------------------------------------------

void representation_check(int k) {
  json inst{{"kind", "ba"}, {"atoms", k}};
  try {
    RepresentationReport rep = check_representation(powerset_ba(k));
    // Algebra-side round trip: the CORO algebra of the dual has the same
    // atom count, i.e. is isomorphic to the original.
    COROAlgebra cx = coro_algebra(uv_dual(powerset_ba(k)).space);
    if (cx.ba.atoms != k)
      fail("representation", inst, "round-trip changed the atom count");
    if (!rep.ok) fail("representation", inst, "report not ok");
  } catch (const CounterexampleError& e) {
    fail("representation", inst, e.what());
  }
}

// The CORO family as a table algebra, when it is one; the independent
// right-hand side of the characterization.
std::optional<FiniteBA> family_ba(const FiniteSpace& x,
                                  const std::vector<Mask>& family) {
  std::unordered_set<Mask> fam(family.begin(), family.end());
  int c = static_cast<int>(family.size());
  if (c > 64) return std::nullopt;
  auto index_of = [&](Mask s) {
    for (int i = 0; i < c; ++i)
      if (family[i] == s) return i;
    return -1;
  };
  std::vector<std::vector<int>> meet(c, std::vector<int>(c)),
      join(c, std::vector<int>(c));
  std::vector<int> neg(c);
  for (int i = 0; i < c; ++i) {
    int ni = index_of(neg_le(x.order, family[i]));
    if (ni < 0) return std::nullopt;
    neg[i] = ni;
    for (int j = 0; j < c; ++j) {
      int mi = index_of(family[i] & family[j]);
      int ji = index_of(int_le(x.order, cl_le(x.order, family[i] | family[j])));
      if (mi < 0 || ji < 0) return std::nullopt;
      meet[i][j] = mi;
      join[i][j] = ji;
    }
  }
  int zero = index_of(0), one = index_of(x.carrier());
  if (zero < 0 || one < 0) return std::nullopt;
  try {
    return ba_from_tables(c, meet, join, neg, zero, one).ba;
  } catch (const AxiomViolation&) {
    return std::nullopt;
  }
}

struct CharacterizationContext {
  // duals of the k-atom algebras for all sizes 2^k-1 that can occur
  std::vector<Poset> dual_orders;  // index k, 1-based use
  explicit CharacterizationContext(int max_points) {
    dual_orders.emplace_back();  // k = 0 unused
    for (int k = 1; (1 << k) - 1 <= max_points; ++k)
      dual_orders.push_back(uv_dual(powerset_ba(k)).space.order);
  }
};

void characterization_check(const CharacterizationContext& ctx,
                            const std::vector<Mask>& up) {
  Poset p = fast_poset(up);
  FiniteSpace x{p};
  bool uv = is_uv_space(x).ok();

  bool rhs = false;
  std::vector<Mask> family = coro(x);
  // The dual of the family algebra has |family| - 1 points, so only
  // families of size n+1 can possibly give the space back.
  if (static_cast<int>(family.size()) == x.points() + 1) {
    if (std::optional<FiniteBA> ba = family_ba(x, family)) {
      int k = ba->atoms;
      if (k < static_cast<int>(ctx.dual_orders.size()))
        rhs = order_isomorphic(x.order, ctx.dual_orders[k]);
    }
  }
  if (uv != rhs)
    fail("characterization", poset_instance(up),
         uv ? "UV-space not homeomorphic to its double dual"
            : "non-UV space homeomorphic to a dual");
  if (uv) {
    int n = x.points();
    bool power = (n & (n + 1)) == 0;  // n = 2^k - 1
    if (!power)
      fail("characterization", poset_instance(up),
           "UV-space size is not one less than a power of two");
  }
}

void collapse_check(const std::vector<Mask>& up) {
  Poset p = fast_poset(up);
  FiniteSpace x{p};

  // Cheap rejections forced by the axioms: the filter {X} must be realized
  // at a minimum point, and the proper family filters are realized
  // bijectively by the points, so the family has exactly n+1 members.
  bool has_min = false;
  for (int i = 0; i < p.n; ++i) has_min |= p.up[i] == p.carrier();
  if (!has_min) return;
  std::vector<Mask> family = coro(x);
  if (static_cast<int>(family.size()) != p.n + 1) return;
  if (!is_uv_space(x).ok()) return;

  std::vector<Mask> a = coro(x), b = cro(x), c = ro(x), d = oro(x);
  sort_family(a);
  sort_family(b);
  sort_family(c);
  sort_family(d);
  if (a != b || b != c || c != d)
    fail("collapse", poset_instance(up),
         "CORO/CRO/RO/ORO families differ on a UV-space");
}

void star_neg_check(const std::vector<Mask>& up) {
  Poset p = fast_poset(up);
  FiniteSpace x{p};
  std::vector<Mask> opens = open_sets(x);
  for (Mask u : opens) {
    Mask st = 0;
    for (Mask v : opens)
      if ((u & v) == 0) st |= v;
    Mask ng = neg_le(p, u);
    if (st & ~ng)
      fail("star-neg", poset_instance(up),
           "pseudocomplement not inside neg on an open");
    // every open of a finite space is compact open
    if (ng & ~st)
      fail("star-neg", poset_instance(up),
           "neg not inside pseudocomplement on a compact open");
  }
}

void separativity_check(const std::vector<Mask>& up) {
  Poset p = fast_poset(up);
  try {
    (void)is_separative(p);
  } catch (const std::logic_error& e) {
    fail("separativity", poset_instance(up), e.what());
  }
}

void figure_two_check() {
  json inst{{"kind", "figure-two"}};
  DualSpace d2 = uv_dual(powerset_ba(2));
  DualSpace d1 = uv_dual(powerset_ba(1));
  UVSum sum = uv_sum(d2.space, d1.space);
  if (sum.space.points() != 7)
    fail("figure-two", inst, "UV-sum does not have 7 points");
  if (sum.space.points() !=
      d2.space.points() + d1.space.points() +
          d2.space.points() * d1.space.points())
    fail("figure-two", inst, "size law violated");
  if (!homeomorphic(sum.space, uv_dual(powerset_ba(3)).space))
    fail("figure-two", inst, "sum is not the dual of the 3-atom algebra");
  DictReport r = check_sum_product(powerset_ba(2), powerset_ba(1));
  if (!r.pass) fail("figure-two", inst, "sum/product comparison failed");
}

void sum_product_check(int ka, int kb) {
  json inst{{"kind", "sum-product"}, {"ka", ka}, {"kb", kb}};
  DictReport r = check_sum_product(powerset_ba(ka), powerset_ba(kb));
  if (!r.pass) fail("sum-product", inst, "comparison map not a homeomorphism");
}

void functor_hom_check(int ka, int kb, const std::vector<int>& atom_map) {
  json inst{{"kind", "hom"},
            {"ka", ka},
            {"kb", kb},
            {"atom_map", atom_map}};
  FiniteBA a = powerset_ba(ka), b = powerset_ba(kb);
  BAHom h{a, b, {}};
  h.map.resize(a.size());
  for (Mask e = 0; e < static_cast<Mask>(a.size()); ++e) {
    Mask img = 0;
    for (int beta = 0; beta < kb; ++beta)
      if (mask_has(e, atom_map[beta])) img |= Mask{1} << beta;
    h.map[e] = img;
  }
  if (!is_homomorphism(h)) fail("functors", inst, "generated map not a hom");
  try {
    if (!check_squares(h)) fail("functors", inst, "algebra square failed");
    if (!check_squares_space(dual_hom(h).map))
      fail("functors", inst, "space square failed");
    if (!check_injective_surjective_duality(h).ok)
      fail("functors", inst, "injective/surjective facts failed");
  } catch (const CounterexampleError& e) {
    fail("functors", inst, e.what());
  }
}

void functor_laws_check(int max_atoms) {
  json inst{{"kind", "laws"}, {"max_atoms", max_atoms}};
  // identity law
  for (int k = 1; k <= max_atoms; ++k) {
    FiniteBA a = powerset_ba(k);
    DualHomResult d = dual_hom(identity_hom(a));
    for (int i = 0; i < d.map.dom.points(); ++i)
      if (d.map.map[i] != i) fail("functors", inst, "identity law failed");
  }
  // composition law: the dual of a composite is the reversed composite
  for (int ka = 1; ka <= max_atoms; ++ka)
    for (int kb = 1; kb <= max_atoms; ++kb)
      for (int kc = 1; kc <= max_atoms; ++kc) {
        FiniteBA a = powerset_ba(ka), b = powerset_ba(kb), c = powerset_ba(kc);
        auto homs_ab = enumerate_homs(a, b);
        auto homs_bc = enumerate_homs(b, c);
        for (const BAHom& h1 : homs_ab)
          for (const BAHom& h2 : homs_bc) {
            BAHom comp = compose_hom(h2, h1);
            DualHomResult dcomp = dual_hom(comp);
            DualHomResult d1 = dual_hom(h1);
            DualHomResult d2 = dual_hom(h2);
            for (int i = 0; i < dcomp.map.dom.points(); ++i) {
              Mask start_filter = dcomp.cod_dual.point_filters[i];
              Mask direct_filter =
                  dcomp.dom_dual.point_filters[dcomp.map.map[i]];
              // stepwise route: through the dual of h2, then of h1,
              // transported point-to-point by filter identity
              int mid = d2.map.map[d2.cod_dual.point_of_filter(start_filter)];
              Mask mid_filter = d2.dom_dual.point_filters[mid];
              int end = d1.map.map[d1.cod_dual.point_of_filter(mid_filter)];
              if (d1.dom_dual.point_filters[end] != direct_filter)
                fail("functors", inst, "composition law failed");
            }
          }
      }
}

void space_squares_check(int max_atoms) {
  json inst{{"kind", "space-squares"}, {"max_atoms", max_atoms}};
  // All UV-maps between duals of small algebras, found by search.
  for (int ka = 1; ka <= max_atoms; ++ka)
    for (int kb = 1; kb <= max_atoms; ++kb) {
      FiniteSpace x = uv_dual(powerset_ba(ka)).space;
      FiniteSpace y = uv_dual(powerset_ba(kb)).space;
      int nx = x.points(), ny = y.points();
      std::vector<int> f(nx, 0);
      std::uint64_t total = 1;
      for (int i = 0; i < nx; ++i) total *= static_cast<std::uint64_t>(ny);
      std::uint64_t found = 0;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < nx; ++i) {
          f[i] = static_cast<int>(t % ny);
          t /= ny;
        }
        SpaceMap m{x, y, f};
        if (!is_uv_map(m)) continue;
        ++found;
        if (!check_squares_space(m))
          fail("functors", inst, "space square failed for a searched map");
      }
      // sanity: UV-maps X -> Y match the homs CORO(Y) -> CORO(X)
      std::uint64_t homs = 1;
      for (int i = 0; i < ka; ++i) homs *= static_cast<std::uint64_t>(kb);
      if (found != homs)
        fail("functors", inst,
             "searched UV-map count differs from the hom count");
    }
}

void hyperlocale_check(const std::string& kind, int n) {
  json inst{{"kind", kind}, {"n", n}};
  if (kind == "hyperspace") {
    HyperWitness w = check_hyperspace_representation(discrete_space(n));
    if (!w.ok) fail("hyperlocale", inst, "hyperspace witness failed");
    if (!homeomorphic(w.hyper.gen.space, w.dual.space))
      fail("hyperlocale", inst, "hyperspace not homeomorphic to the dual");
    // clopen algebra vs CORO of the hyperspace, via box
    COROAlgebra ch = coro_algebra(w.hyper.gen.space);
    std::vector<Mask> boxes = w.hyper.gen.generators;
    sort_family(boxes);
    std::vector<Mask> family = ch.sets;
    sort_family(family);
    if (boxes != family)
      fail("hyperlocale", inst, "box sets are not the CORO family");
  } else if (kind == "z-lemma") {
    FilterLocale loc = filt_locale(powerset_ba(n));
    if (!is_stone_locale(loc.lattice))
      fail("hyperlocale", inst, "filter lattice is not a Stone locale");
    ComplementedElements z = complemented_elements(loc.lattice);
    if (z.ba.atoms != n)
      fail("hyperlocale", inst, "complemented elements differ from the base");
  } else if (kind == "same-topologies") {
    if (!check_same_topologies(powerset_ba(n)))
      fail("hyperlocale", inst, "generated topologies differ");
    FilterLocale loc = filt_locale(powerset_ba(n));
    GeneratedSpace uvl = upper_vietoris_of_locale(loc.lattice);
    if (!homeomorphic(uvl.space, uv_dual(powerset_ba(n)).space))
      fail("hyperlocale", inst, "locale route differs from the filter route");
  } else if (kind == "uv-iff-locale-dual") {
    if (!check_uv_iff_locale(uv_dual(powerset_ba(n)).space))
      fail("hyperlocale", inst, "dual space failed the locale route");
  } else if (kind == "uv-iff-locale-chain") {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = full_mask(n) & ~full_mask(i);
    bool uv = check_uv_iff_locale(FiniteSpace{fast_poset(up)});
    if (uv != (n == 1))
      fail("hyperlocale", inst, "chain classification is wrong");
  } else if (kind == "uv-iff-locale-antichain") {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = Mask{1} << i;
    bool uv = check_uv_iff_locale(FiniteSpace{fast_poset(up)});
    if (uv != (n == 1))
      fail("hyperlocale", inst, "antichain classification is wrong");
  } else {
    fail("hyperlocale", inst, "unknown check kind");
  }
}

void dictionary_check(const std::string& row, int k) {
  json inst{{"kind", "dictionary"}, {"row", row}, {"atoms", k}};
  FiniteBA a = powerset_ba(k);
  DualSpace d = uv_dual(a);
  const FiniteSpace& x = d.space;

  if (row == "eta") {
    auto filters = enumerate_proper_filters(a);
    for (const BAFilter& f : filters) (void)eta(d, f);
    for (const BAFilter& f : filters)
      for (const BAFilter& g : filters)
        if (mask_subset(f.elems, g.elems) !=
            mask_subset(eta(d, g), eta(d, f)))
          fail("dictionary", inst, "eta does not reverse the order");
  } else if (row == "zeta") {
    auto ideals = enumerate_ideals(a);
    std::vector<Mask> images;
    for (const BAIdeal& i : ideals) images.push_back(zeta(d, i));
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j)
        if (mask_subset(ideals[i].elems, ideals[j].elems) !=
            mask_subset(images[i], images[j]))
          fail("dictionary", inst, "zeta is not an order isomorphism");
    std::vector<Mask> family = oro(x);
    sort_family(images);
    sort_family(family);
    if (images != family)
      fail("dictionary", inst, "zeta does not surject onto ORO");
  } else if (row == "principal") {
    std::vector<Mask> hats;
    for (Mask e = 0; e < static_cast<Mask>(a.size()); ++e)
      hats.push_back(hat(d, e));
    for (Mask e1 = 0; e1 < static_cast<Mask>(a.size()); ++e1)
      for (Mask e2 = 0; e2 < static_cast<Mask>(a.size()); ++e2)
        if (a.leq(e1, e2) != mask_subset(hats[e1], hats[e2]))
          fail("dictionary", inst, "principal rows are not order-faithful");
    std::vector<Mask> family = coro(x);
    sort_family(hats);
    if (hats != family)
      fail("dictionary", inst, "principal rows do not cover CORO");
  } else if (row == "maximal") {
    if (!maximal_rows(d).pass) fail("dictionary", inst, "maximal rows failed");
  } else if (row == "relativization") {
    COROAlgebra cx = coro_algebra(x);
    for (Mask e = 1; e < static_cast<Mask>(a.size()); ++e)
      if (!relativization_row(x, cx.sets[e]).pass)
        fail("dictionary", inst,
             "relativization failed at " + a.element_name(e));
  } else if (row == "meet-join") {
    COROAlgebra cx = coro_algebra(x);
    std::vector<Mask> opens = open_sets(x);
    if (!is_complete_uv(x))
      fail("dictionary", inst, "finite dual space is not complete");
    int c = cx.ba.size();
    for (Mask sub = 0; sub < (Mask{1} << c); ++sub) {
      std::vector<Mask> fam;
      for (int i : mask_elems(sub)) fam.push_back(cx.sets[i]);
      if (!meet_join_formulas(x, fam, cx, opens).pass)
        fail("dictionary", inst, "meet/join formulas failed");
    }
  } else if (row == "atoms") {
    if (!atoms_row(x).pass) fail("dictionary", inst, "atoms row failed");
  } else if (row == "canonical-extension") {
    if (canonical_extension(x).atoms != k)
      fail("dictionary", inst, "canonical extension size changed");
  } else if (row == "macneille") {
    if (!macneille(x).pass) fail("dictionary", inst, "macneille maps failed");
  } else {
    fail("dictionary", inst, "unknown row");
  }
}

void applications_check(const std::string& kind, int k, int n) {
  json inst{{"kind", kind}, {"k", k}, {"n", n}};
  FiniteSpace x = uv_dual(powerset_ba(k)).space;
  if (kind == "embed") {
    EmbedResult e = embed_bn(x, n);
    if (n == k) {
      // with as many blocks as atoms the map is a homeomorphism
      std::vector<char> seen(e.target.space.points(), 0);
      for (int v : e.onto.map) seen[v] = 1;
      bool bij = e.target.space.points() == x.points() &&
                 std::all_of(seen.begin(), seen.end(),
                             [](char c) { return c != 0; });
      if (!bij || !homeomorphic(x, e.target.space))
        fail("applications", inst, "full-rank embed is not a homeomorphism");
    }
  } else if (kind == "signature") {
    // every regular partition comes from a set partition of the atoms
    COROAlgebra cx = coro_algebra(x);
    std::vector<std::vector<Mask>> partitions;
    std::vector<Mask> blocks;
    std::function<void(Mask)> split = [&](Mask rest) {
      if (!rest) {
        partitions.push_back(blocks);
        return;
      }
      int low = mask_min(rest);
      Mask others = rest & ~(Mask{1} << low);
      for (Mask sub = 0;; sub = (sub - others) & others) {
        blocks.push_back((Mask{1} << low) | sub);
        split(rest & ~blocks.back());
        blocks.pop_back();
        if (sub == others) break;
      }
    };
    split(full_mask(k));
    for (const auto& part_elems : partitions) {
      RegularPartition part;
      for (Mask e : part_elems) part.blocks.push_back(cx.sets[e]);
      validate_partition(x, part);
      int m = static_cast<int>(part.blocks.size());
      std::vector<char> realized(std::size_t{1} << m, 0);
      for (int p = 0; p < x.points(); ++p)
        realized[signature(x, part, p, cx)] = 1;
      for (Mask kk = 1; kk < (Mask{1} << m); ++kk)
        if (!realized[kk])
          fail("applications", inst, "a nonempty index set is not realized");
    }
  } else if (kind == "chain") {
    for (int len = 1; len <= k; ++len) {
      std::vector<Mask> chain = find_chain(x, len);
      for (int i = 0; i + 1 < len; ++i) {
        if (!mask_subset(chain[i + 1], chain[i]) || chain[i + 1] == chain[i])
          fail("applications", inst, "chain is not strictly descending");
        if ((chain[i] & neg_le(x.order, chain[i + 1])) == 0)
          fail("applications", inst, "chain step has no witness");
      }
      std::vector<Mask> anti = find_antichain(x, len);
      for (std::size_t i = 0; i < anti.size(); ++i)
        for (std::size_t j = i + 1; j < anti.size(); ++j)
          if (anti[i] & anti[j])
            fail("applications", inst, "antichain blocks overlap");
    }
    bool threw = false;
    try {
      find_chain(x, k + 1);
    } catch (const TooLong&) {
      threw = true;
    }
    if (!threw) fail("applications", inst, "over-long chain not rejected");
  } else if (kind == "split-complete") {
    CompleteSplit s = split_complete(x);
    if (s.atomless_part.space.points() != 0 ||
        s.atomic_part.space.points() != x.points())
      fail("applications", inst, "finite split is not atomic-total");
  } else {
    fail("applications", inst, "unknown check kind");
  }
}

void oracles_check(const std::string& kind, int n) {
  json inst{{"kind", kind}, {"n", n}};
  if (kind == "filters") {
    FiniteBA a = powerset_ba(n);
    auto brute = enumerate_proper_filters(a);
    auto principal = principal_proper_filters(a);
    if (brute.size() != principal.size() ||
        brute.size() != static_cast<std::size_t>(a.size() - 1))
      fail("oracles", inst, "filter counts disagree");
    for (std::size_t i = 0; i < brute.size(); ++i)
      if (brute[i].elems != principal[i].elems)
        fail("oracles", inst, "brute-force and principal filters differ");
    // filters under inclusion vs nonzero elements under reverse order
    for (const BAFilter& f : brute)
      for (const BAFilter& g : brute)
        if (mask_subset(f.elems, g.elems) !=
            a.leq(g.generator(), f.generator()))
          fail("oracles", inst, "filter order is not the reversed order");
    auto ideals = enumerate_ideals(a);
    if (ideals.size() != static_cast<std::size_t>(a.size()))
      fail("oracles", inst, "ideal count is not the element count");
    for (const BAIdeal& i : ideals)
      if (!is_normal_ideal(a, i))
        fail("oracles", inst, "a finite ideal is not normal");
  } else if (kind == "hom-oracle") {
    // tiny-scale cross-check of hom generation against all element maps
    FiniteBA a = powerset_ba(n), b = powerset_ba(n == 1 ? 2 : 1);
    auto gen = enumerate_homs(a, b);
    std::uint64_t all = 1, sz = static_cast<std::uint64_t>(b.size());
    for (int i = 0; i < a.size(); ++i) all *= sz;
    std::uint64_t found = 0;
    for (std::uint64_t idx = 0; idx < all; ++idx) {
      std::uint64_t t = idx;
      BAHom h{a, b, {}};
      h.map.resize(a.size());
      for (int i = 0; i < a.size(); ++i) {
        h.map[i] = static_cast<Mask>(t % sz);
        t /= sz;
      }
      if (is_homomorphism(h)) ++found;
    }
    if (found != gen.size())
      fail("oracles", inst, "hom generation misses or invents maps");
  } else if (kind == "poset-counts") {
    static const std::uint64_t known[] = {0, 1, 3, 19, 219};
    if (count_labeled_posets(n) != count_posets_by_relation_filter(n))
      fail("oracles", inst, "enumerator disagrees with the relation filter");
    if (n <= 4 && count_labeled_posets(n) != known[n])
      fail("oracles", inst, "enumerator disagrees with the known count");
  } else {
    fail("oracles", inst, "unknown oracle kind");
  }
}

void ro_algebra_check(const std::vector<Mask>& up) {
  Poset p = fast_poset(up);
  try {
    ROAlgebra r = ro_algebra(p);
    if ((std::size_t{1} << r.ba.atoms) != all_ro_upsets(p).size())
      fail("ro-algebra", poset_instance(up), "element count mismatch");
  } catch (const CounterexampleError& e) {
    fail("ro-algebra", poset_instance(up), e.what());
  }
}

}  // namespace

// ---- public runners --------------------------------------------------------

std::vector<InstanceRecord> run_representation(int max_atoms) {
  std::vector<InstanceRecord> out;
  for (int k = 1; k <= max_atoms; ++k)
    out.push_back(run_record("representation", "B_" + std::to_string(k),
                             [k] {
                               representation_check(k);
                               return std::uint64_t{1};
                             }));
  return out;
}

std::vector<InstanceRecord> run_characterization(int max_poset, int jobs,
                                                 std::uint64_t sample_at_6,
                                                 std::uint64_t seed) {
  CharacterizationContext ctx(max_poset);
  std::vector<InstanceRecord> out;
  for (int n = 1; n <= max_poset; ++n) {
    std::uint64_t sample = (n >= 6) ? sample_at_6 : 0;
    out.push_back(sweep_record(
        "characterization", n, jobs,
        [&ctx](const std::vector<Mask>& up) {
          characterization_check(ctx, up);
        },
        sample, seed));
  }
  return out;
}

std::vector<InstanceRecord> run_collapse(int max_poset, int jobs) {
  std::vector<InstanceRecord> out;
  for (int n = 1; n <= max_poset; ++n)
    out.push_back(sweep_record("collapse", n, jobs, collapse_check));
  return out;
}

std::vector<InstanceRecord> run_star_neg(int max_poset, int jobs) {
  std::vector<InstanceRecord> out;
  for (int n = 1; n <= max_poset; ++n)
    out.push_back(sweep_record("star-neg", n, jobs, star_neg_check));
  return out;
}

std::vector<InstanceRecord> run_figure_two() {
  return {run_record("figure-two", "UV(4) + UV(2)", [] {
    figure_two_check();
    return std::uint64_t{1};
  })};
}

std::vector<InstanceRecord> run_functors(int max_atoms) {
  std::vector<InstanceRecord> out;
  out.push_back(run_record("functors", "laws", [max_atoms] {
    functor_laws_check(max_atoms);
    return std::uint64_t{1};
  }));
  std::uint64_t homs = 0;
  InstanceRecord rec = run_record("functors", "hom squares", [&] {
    for (int ka = 1; ka <= max_atoms; ++ka)
      for (int kb = 1; kb <= max_atoms; ++kb) {
        std::vector<int> g(kb, 0);
        std::uint64_t total = 1;
        for (int i = 0; i < kb; ++i)
          total *= static_cast<std::uint64_t>(ka);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          std::uint64_t t = idx;
          for (int i = 0; i < kb; ++i) {
            g[i] = static_cast<int>(t % ka);
            t /= ka;
          }
          functor_hom_check(ka, kb, g);
          ++homs;
        }
      }
    return homs;
  });
  out.push_back(rec);
  out.push_back(run_record("functors", "space squares by search",
                           [max_atoms] {
                             space_squares_check(max_atoms);
                             return std::uint64_t{1};
                           }));
  return out;
}

std::vector<InstanceRecord> run_hyperlocale(int max_atoms) {
  std::vector<InstanceRecord> out;
  int cap = std::min(max_atoms, 4);
  for (const char* kind :
       {"hyperspace", "z-lemma", "same-topologies", "uv-iff-locale-dual"})
    for (int n = 1; n <= (std::string(kind) == "uv-iff-locale-dual"
                              ? std::min(cap, 3)
                              : cap);
         ++n)
      out.push_back(run_record("hyperlocale",
                               std::string(kind) + " n=" + std::to_string(n),
                               [kind, n] {
                                 hyperlocale_check(kind, n);
                                 return std::uint64_t{1};
                               }));
  for (const char* kind : {"uv-iff-locale-chain", "uv-iff-locale-antichain"})
    for (int n = 1; n <= cap; ++n)
      out.push_back(run_record("hyperlocale",
                               std::string(kind) + " n=" + std::to_string(n),
                               [kind, n] {
                                 hyperlocale_check(kind, n);
                                 return std::uint64_t{1};
                               }));
  return out;
}

std::vector<InstanceRecord> run_dictionary(int max_atoms) {
  std::vector<InstanceRecord> out;
  int cap = std::min(max_atoms, 4);
  for (const char* row :
       {"eta", "zeta", "principal", "maximal", "relativization", "meet-join",
        "atoms", "canonical-extension", "macneille"})
    for (int k = 1; k <= cap; ++k)
      out.push_back(run_record("dictionary",
                               std::string(row) + " B_" + std::to_string(k),
                               [row, k] {
                                 dictionary_check(row, k);
                                 return std::uint64_t{1};
                               }));
  return out;
}

std::vector<InstanceRecord> run_sum_product(int max_product_atoms) {
  std::vector<InstanceRecord> out;
  for (int ka = 1; ka < max_product_atoms; ++ka)
    for (int kb = 1; ka + kb <= max_product_atoms; ++kb)
      out.push_back(run_record(
          "sum-product",
          "B_" + std::to_string(ka) + " x B_" + std::to_string(kb),
          [ka, kb] {
            sum_product_check(ka, kb);
            return std::uint64_t{1};
          }));
  return out;
}

std::vector<InstanceRecord> run_applications(int max_atoms) {
  std::vector<InstanceRecord> out;
  int cap = std::min(max_atoms, 5);
  for (int k = 1; k <= cap; ++k)
    for (int n = 1; n <= k; ++n)
      out.push_back(run_record(
          "applications",
          "embed n=" + std::to_string(n) + " into B_" + std::to_string(k),
          [k, n] {
            applications_check("embed", k, n);
            return std::uint64_t{1};
          }));
  for (int k = 1; k <= std::min(max_atoms, 3); ++k)
    out.push_back(run_record("applications",
                             "signatures B_" + std::to_string(k), [k] {
                               applications_check("signature", k, 0);
                               return std::uint64_t{1};
                             }));
  for (int k = 1; k <= cap; ++k)
    out.push_back(run_record("applications", "chains B_" + std::to_string(k),
                             [k] {
                               applications_check("chain", k, 0);
                               return std::uint64_t{1};
                             }));
  for (int k = 1; k <= cap; ++k)
    out.push_back(run_record("applications",
                             "complete split B_" + std::to_string(k), [k] {
                               applications_check("split-complete", k, 0);
                               return std::uint64_t{1};
                             }));
  return out;
}

std::vector<InstanceRecord> run_oracles(int max_atoms, int max_poset) {
  std::vector<InstanceRecord> out;
  for (int k = 1; k <= std::min(max_atoms, 5); ++k)
    out.push_back(run_record("oracles", "filters B_" + std::to_string(k),
                             [k] {
                               oracles_check("filters", k);
                               return std::uint64_t{1};
                             }));
  for (int k = 1; k <= 2; ++k)
    out.push_back(run_record("oracles", "hom oracle k=" + std::to_string(k),
                             [k] {
                               oracles_check("hom-oracle", k);
                               return std::uint64_t{1};
                             }));
  for (int n = 1; n <= std::min(max_poset, 4); ++n)
    out.push_back(run_record("oracles", "poset counts n=" + std::to_string(n),
                             [n] {
                               oracles_check("poset-counts", n);
                               return std::uint64_t{1};
                             }));
  for (int n = 1; n <= std::min(max_poset, 6); ++n)
    out.push_back(sweep_record("ro-algebra", n, 1, ro_algebra_check));
  for (int n = 1; n <= std::min(max_poset, 6); ++n)
    out.push_back(sweep_record("separativity", n, 1, separativity_check));
  return out;
}

std::vector<InstanceRecord> run_fault_injection() {
  std::vector<InstanceRecord> out;
  out.push_back(run_record("fault-injection", "corrupt neg", [] {
    json inst{{"kind", "fault"}};
    testing::set_fault(testing::Fault::None);
    try {
      representation_check(2);
    } catch (const CounterexampleError&) {
      fail("fault-injection", inst, "baseline run failed without a fault");
    }
    testing::set_fault(testing::Fault::CorruptNeg);
    std::string payload;
    try {
      representation_check(2);
    } catch (const CounterexampleError& e) {
      payload = e.payload();
    }
    if (payload.empty()) {
      testing::set_fault(testing::Fault::None);
      fail("fault-injection", inst,
           "corrupted neg did not break the representation");
    }
    // Replaying while the fault is active reproduces the failure.
    std::string msg;
    if (replay_payload(payload, &msg)) {
      testing::set_fault(testing::Fault::None);
      fail("fault-injection", inst, "replay did not reproduce the failure");
    }
    testing::set_fault(testing::Fault::None);
    if (!replay_payload(payload, &msg))
      fail("fault-injection", inst, "replay still fails without the fault");
    return std::uint64_t{1};
  }));
  return out;
}

VerificationRun verify_all(const Bounds& bounds) {
  VerificationRun run;
  run.bounds = bounds;
  auto t0 = chrono::steady_clock::now();
  // Counterexamples thrown while a runner builds shared context (possible
  // under fault injection) still become records, not aborts.
  auto add = [&](const char* name,
                 const std::function<std::vector<InstanceRecord>()>& runner) {
    try {
      for (auto& r : runner()) run.records.push_back(std::move(r));
    } catch (const CounterexampleError& e) {
      InstanceRecord rec;
      rec.theorem = name;
      rec.instance = "setup";
      rec.pass = false;
      rec.checked = 0;
      rec.detail = e.what();
      rec.payload = e.payload();
      run.records.push_back(std::move(rec));
    }
  };
  const Bounds& b = bounds;
  add("representation", [&] { return run_representation(b.max_atoms); });
  add("characterization",
      [&] { return run_characterization(b.max_poset, b.jobs, 0, b.seed); });
  add("collapse", [&] { return run_collapse(b.max_poset, b.jobs); });
  add("star-neg",
      [&] { return run_star_neg(std::min(b.max_poset, 5), b.jobs); });
  add("figure-two", [&] { return run_figure_two(); });
  add("sum-product",
      [&] { return run_sum_product(std::min(b.max_atoms + 1, 5)); });
  add("functors", [&] { return run_functors(std::min(b.max_atoms, 3)); });
  add("hyperlocale", [&] { return run_hyperlocale(b.max_atoms); });
  add("dictionary", [&] { return run_dictionary(b.max_atoms); });
  add("applications", [&] { return run_applications(b.max_atoms); });
  add("oracles", [&] { return run_oracles(b.max_atoms, b.max_poset); });
  run.total_millis = ms_since(t0);
  return run;
}

bool VerificationRun::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

std::uint64_t VerificationRun::total_checked() const {
  std::uint64_t n = 0;
  for (const auto& r : records) n += r.checked;
  return n;
}

std::size_t VerificationRun::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

bool replay_payload(const std::string& payload_json, std::string* message) {
  json j;
  try {
    j = json::parse(payload_json);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("payload is not JSON: ") + e.what());
  }
  if (!j.contains("theorem") || !j.contains("instance"))
    throw SchemaError("payload needs theorem and instance");
  std::string theorem = j["theorem"].get<std::string>();
  json inst = j["instance"];

  auto rows = [&]() -> std::vector<Mask> {
    if (!inst.contains("up")) throw SchemaError("instance lacks poset rows");
    return inst["up"].get<std::vector<Mask>>();
  };

  try {
    if (theorem == "representation") {
      representation_check(inst["atoms"].get<int>());
    } else if (theorem == "dual-shortcut" || theorem == "dual-spectral" ||
               theorem == "dual-uv") {
      // assertions raised inside the dual-space construction itself
      uv_dual(powerset_ba(inst["atoms"].get<int>()));
    } else if (theorem == "characterization") {
      CharacterizationContext ctx(static_cast<int>(rows().size()));
      characterization_check(ctx, rows());
    } else if (theorem == "collapse") {
      collapse_check(rows());
    } else if (theorem == "star-neg") {
      star_neg_check(rows());
    } else if (theorem == "separativity") {
      separativity_check(rows());
    } else if (theorem == "ro-algebra") {
      ro_algebra_check(rows());
    } else if (theorem == "figure-two") {
      figure_two_check();
    } else if (theorem == "sum-product") {
      sum_product_check(inst["ka"].get<int>(), inst["kb"].get<int>());
    } else if (theorem == "functors") {
      std::string kind = inst["kind"].get<std::string>();
      if (kind == "hom")
        functor_hom_check(inst["ka"].get<int>(), inst["kb"].get<int>(),
                          inst["atom_map"].get<std::vector<int>>());
      else if (kind == "laws")
        functor_laws_check(inst["max_atoms"].get<int>());
      else
        space_squares_check(inst["max_atoms"].get<int>());
    } else if (theorem == "hyperlocale") {
      hyperlocale_check(inst["kind"].get<std::string>(),
                        inst["n"].get<int>());
    } else if (theorem == "dictionary") {
      dictionary_check(inst["row"].get<std::string>(),
                       inst["atoms"].get<int>());
    } else if (theorem == "applications") {
      applications_check(inst["kind"].get<std::string>(),
                         inst["k"].get<int>(), inst["n"].get<int>());
    } else if (theorem == "oracles") {
      oracles_check(inst["kind"].get<std::string>(), inst["n"].get<int>());
    } else {
      throw SchemaError("unknown theorem in payload: " + theorem);
    }
  } catch (const CounterexampleError& e) {
    if (message) *message = e.what();
    return false;
  }
  if (message) *message = "check passes";
  return true;
}

std::string records_to_jsonl(const VerificationRun& run,
                             bool include_timings) {
  std::string out;
  for (const auto& r : run.records) {
    json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    if (include_timings) j["ms"] = r.millis;
    if (!r.pass) {
      j["detail"] = r.detail;
      if (!r.payload.empty()) j["payload"] = json::parse(r.payload);
    }
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace uvlab
