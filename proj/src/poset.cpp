#include "uvlab/poset.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "uvlab/errors.hpp"
#include "uvlab/kernels.hpp"

namespace uvlab {

namespace testing {
namespace {
std::atomic<Fault> g_fault{Fault::None};
}
void set_fault(Fault f) { g_fault.store(f, std::memory_order_release); }
Fault fault() { return g_fault.load(std::memory_order_acquire); }
}  // namespace testing

Mask Poset::up_of(Mask set) const {
  Mask acc = 0;
  for (int x : mask_elems(set)) acc |= up[x];
  return acc;
}

Mask Poset::down_of(Mask set) const {
  Mask acc = 0;
  for (int x = 0; x < n; ++x)
    if (up[x] & set) acc |= Mask{1} << x;
  return acc;
}

Mask Poset::down_row(int x) const {
  Mask acc = 0;
  for (int y = 0; y < n; ++y)
    if (mask_has(up[y], x)) acc |= Mask{1} << y;
  return acc;
}

Mask Poset::maximal_elements() const {
  Mask acc = 0;
  for (int x = 0; x < n; ++x)
    if (up[x] == (Mask{1} << x)) acc |= Mask{1} << x;
  return acc;
}

Mask Poset::minimal_elements() const {
  Mask acc = 0;
  for (int x = 0; x < n; ++x)
    if (down_row(x) == (Mask{1} << x)) acc |= Mask{1} << x;
  return acc;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    Mask strictly_above = up[x] & ~(Mask{1} << x);
    for (int y : mask_elems(strictly_above)) {
      Mask between = strictly_above & down_row(y) & ~(Mask{1} << y);
      if (!between) out.emplace_back(x, y);
    }
  }
  return out;
}

int Poset::id_of(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == label) return i;
  throw UnknownElement("no element named '" + label + "'");
}

std::pair<Poset, std::vector<int>> Poset::restrict(Mask set) const {
  std::vector<int> old_ids = mask_elems(set);
  int m = static_cast<int>(old_ids.size());
  std::vector<int> new_id(n, -1);
  for (int i = 0; i < m; ++i) new_id[old_ids[i]] = i;
  Poset q;
  q.n = m;
  q.labels.resize(m);
  q.up.resize(m);
  for (int i = 0; i < m; ++i) {
    q.labels[i] = label(old_ids[i]);
    Mask row = 0;
    for (int y : mask_elems(up[old_ids[i]] & set))
      row |= Mask{1} << new_id[y];
    q.up[i] = row;
  }
  return {std::move(q), std::move(old_ids)};
}

namespace {

void check_rows_are_partial_order(const std::vector<Mask>& up, int n) {
  Mask carrier = full_mask(n);
  for (int x = 0; x < n; ++x) {
    if (up[x] & ~carrier)
      throw UnknownElement("successor row mentions an id out of range");
    if (!mask_has(up[x], x))
      throw CycleError("relation is not reflexive at element " +
                       std::to_string(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y : mask_elems(up[x])) {
      if (up[y] & ~up[x])
        throw CycleError("relation is not transitive");
      if (y != x && mask_has(up[y], x))
        throw CycleError("antisymmetry fails between " + std::to_string(x) +
                         " and " + std::to_string(y));
    }
}

}  // namespace

Poset poset_from_up_rows(std::vector<Mask> up, std::vector<std::string> labels) {
  Poset p;
  p.n = static_cast<int>(up.size());
  if (p.n > 63) throw SizeLimit("posets are limited to 63 elements");
  check_rows_are_partial_order(up, p.n);
  p.up = std::move(up);
  if (labels.empty()) {
    p.labels.resize(p.n);
    for (int i = 0; i < p.n; ++i) p.labels[i] = "p" + std::to_string(i);
  } else {
    if (static_cast<int>(labels.size()) != p.n)
      throw SchemaError("label count does not match element count");
    p.labels = std::move(labels);
  }
  return p;
}

Poset validate_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::string> names;
  std::map<std::string, int> id;
  auto intern = [&](const std::string& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(names.size());
    if (i >= 63) throw SizeLimit("posets are limited to 63 elements");
    names.push_back(s);
    id.emplace(s, i);
    return i;
  };
  for (const auto& e : elements) {
    if (id.count(e)) throw DuplicateLabelError("duplicate element '" + e + "'");
    intern(e);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    int ia = intern(a);  // ids in first-appearance order, left to right
    int ib = intern(b);
    edges.emplace_back(ia, ib);
  }

  int n = static_cast<int>(names.size());
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = Mask{1} << i;
  for (auto [a, b] : edges) up[a] |= Mask{1} << b;

  // Reflexive-transitive closure.
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Mask row = up[x];
      for (int y : mask_elems(row)) row |= up[y];
      if (row != up[x]) {
        up[x] = row;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y : mask_elems(up[x]))
      if (y != x && mask_has(up[y], x))
        throw CycleError("closure violates antisymmetry between '" +
                         names[x] + "' and '" + names[y] + "'");
  return poset_from_up_rows(std::move(up), std::move(names));
}

Poset validate_poset(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  return validate_poset({}, pairs);
}

Mask up_set(const Poset& p, int x) {
  if (x < 0 || x >= p.n)
    throw UnknownElement("element id " + std::to_string(x) + " out of range");
  return p.up[x];
}

namespace {

void check_host(const Poset& p, Mask u) {
  if (u & ~p.carrier())
    throw HostMismatch("subset mentions elements outside the poset");
}

}  // namespace

Mask cl_le(const Poset& p, Mask u) {
  check_host(p, u);
  Mask out;
  kernels::active().cl_le(p.up.data(), p.n, &u, &out, 1);
  return out;
}

Mask int_le(const Poset& p, Mask u) {
  check_host(p, u);
  Mask out;
  kernels::active().int_le(p.up.data(), p.n, &u, &out, 1);
  return out;
}

Mask neg_le(const Poset& p, Mask u) {
  check_host(p, u);
  Mask out;
  kernels::active().neg_le(p.up.data(), p.n, &u, &out, 1);
  if (testing::fault() == testing::Fault::CorruptNeg && out != 0)
    out &= out - 1;
  return out;
}

bool is_upset(const Poset& p, Mask u) {
  check_host(p, u);
  std::uint8_t flag;
  kernels::active().upset_flags(p.up.data(), p.n, &u, &flag, 1);
  return flag != 0;
}

bool is_ro_upset(const Poset& p, Mask u) {
  check_host(p, u);
  std::uint8_t flag;
  kernels::active().ro_upset_flags(p.up.data(), p.n, &u, &flag, 1);
  return flag != 0;
}

bool family_less(Mask a, Mask b) {
  int sa = mask_size(a), sb = mask_size(b);
  if (sa != sb) return sa < sb;
  // Lexicographic on ascending id lists: the smaller minimum wins.
  while (a && b) {
    int la = mask_min(a), lb = mask_min(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

void sort_family(std::vector<Mask>& family) {
  std::sort(family.begin(), family.end(), family_less);
}

std::vector<Mask> all_upsets(const Poset& p) {
  std::vector<Mask> out;
  if (p.n <= 20) {
    const std::size_t total = std::size_t{1} << p.n;
    constexpr std::size_t kBlock = 1024;
    std::vector<Mask> cand(kBlock);
    std::vector<std::uint8_t> flags(kBlock);
    const auto& k = kernels::active();
    for (std::size_t base = 0; base < total; base += kBlock) {
      std::size_t m = std::min(kBlock, total - base);
      for (std::size_t i = 0; i < m; ++i) cand[i] = base + i;
      k.upset_flags(p.up.data(), p.n, cand.data(), flags.data(), m);
      for (std::size_t i = 0; i < m; ++i)
        if (flags[i]) out.push_back(cand[i]);
    }
  } else {
    // Wide carriers: DFS in an order where every strict successor is
    // decided before its element, so upward closure is one mask test.
    std::vector<int> order(p.n);
    for (int i = 0; i < p.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int ua = mask_size(p.up[a]), ub = mask_size(p.up[b]);
      if (ua != ub) return ua < ub;
      return a < b;
    });
    constexpr std::size_t kCap = std::size_t{1} << 23;
    Mask included = 0;
    auto dfs = [&](auto&& self, int i) -> void {
      if (i == p.n) {
        if (out.size() >= kCap)
          throw SizeLimit("upset family exceeds the enumeration cap");
        out.push_back(included);
        return;
      }
      int x = order[i];
      self(self, i + 1);
      if ((p.up[x] & ~included & ~(Mask{1} << x)) == 0) {
        included |= Mask{1} << x;
        self(self, i + 1);
        included &= ~(Mask{1} << x);
      }
    };
    dfs(dfs, 0);
  }
  sort_family(out);
  return out;
}

std::vector<Mask> all_ro_upsets(const Poset& p) {
  std::vector<Mask> upsets = all_upsets(p);
  std::vector<std::uint8_t> flags(upsets.size());
  kernels::active().ro_upset_flags(p.up.data(), p.n, upsets.data(),
                                   flags.data(), upsets.size());
  std::vector<Mask> hits;
  for (std::size_t i = 0; i < upsets.size(); ++i)
    if (flags[i]) hits.push_back(upsets[i]);
  return hits;
}

bool is_separative(const Poset& p) {
  bool by_ro = true;
  for (int x = 0; x < p.n; ++x) by_ro &= is_ro_upset(p, p.up[x]);

  bool by_separation = true;
  for (int x = 0; x < p.n && by_separation; ++x)
    for (int y = 0; y < p.n && by_separation; ++y) {
      if (p.leq(x, y)) continue;
      bool found = false;
      for (int z : mask_elems(p.up[y]))
        if ((p.up[z] & p.up[x]) == 0) {
          found = true;
          break;
        }
      by_separation &= found;
    }

  if (by_ro != by_separation)
    throw std::logic_error(
        "separativity characterizations disagree; this is a bug");
  return by_ro;
}

std::optional<int> poset_meet(const Poset& p, int x, int y) {
  Mask lower = p.down_row(x) & p.down_row(y);
  if (!lower) return std::nullopt;
  // The meet is the unique maximal common lower bound.
  Mask maximal = 0;
  for (int z : mask_elems(lower))
    if ((p.up[z] & lower) == (Mask{1} << z)) maximal |= Mask{1} << z;
  if (mask_size(maximal) != 1) return std::nullopt;
  return mask_min(maximal);
}

// ---- canonical forms and isomorphism ------------------------------------

namespace {

// Stable partition refinement: colors elements by (updeg, downdeg), then
// repeatedly by the multisets of neighbor colors until stable.
std::vector<int> refine_colors(const Poset& p) {
  int n = p.n;
  std::vector<Mask> down(n);
  for (int x = 0; x < n; ++x) down[x] = p.down_row(x);

  std::vector<int> color(n);
  {
    std::vector<std::pair<std::pair<int, int>, int>> sig(n);
    for (int x = 0; x < n; ++x)
      sig[x] = {{mask_size(p.up[x]), mask_size(down[x])}, x};
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::pair<int, int>, int> ids;
    for (auto& s : sorted)
      ids.emplace(s.first, static_cast<int>(ids.size()));
    for (int x = 0; x < n; ++x) color[x] = ids[sig[x].first];
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> ups, downs;
      for (int y : mask_elems(p.up[x] & ~(Mask{1} << x)))
        ups.push_back(color[y]);
      for (int y : mask_elems(down[x] & ~(Mask{1} << x)))
        downs.push_back(color[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[x].push_back(color[x]);
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), ups.begin(), ups.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), downs.begin(), downs.end());
    }
    std::map<std::vector<int>, int> ids;
    {
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      for (auto& s : sorted) ids.emplace(s, static_cast<int>(ids.size()));
    }
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = ids[sig[x]];
    if (next == color) return color;
    color = std::move(next);
  }
}

struct CanonSearch {
  const Poset& p;
  std::vector<int> color;
  std::vector<int> perm;       // perm[d] = original id placed at position d
  std::vector<bool> used;
  std::vector<std::uint8_t> stream, best_stream;
  std::vector<int> best_perm;
  bool have_best = false;

  explicit CanonSearch(const Poset& poset)
      : p(poset), color(refine_colors(poset)), used(poset.n, false) {}

  // Bits that become determined when `x` is placed at depth d: relations
  // against every already-placed element, then reflexivity slot.
  void append_bits(int x, std::vector<std::uint8_t>& out) const {
    for (int j = 0; j < static_cast<int>(perm.size()); ++j) {
      out.push_back(p.leq(x, perm[j]) ? 1 : 0);
      out.push_back(p.leq(perm[j], x) ? 1 : 0);
    }
  }

  void dfs() {
    int n = p.n, d = static_cast<int>(perm.size());
    if (d == n) {
      if (!have_best || stream < best_stream) {
        best_stream = stream;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    // Candidates: unused elements, one representative per identical
    // (color, relations-to-prefix) signature.
    std::vector<std::pair<std::vector<std::uint8_t>, int>> cands;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      std::vector<std::uint8_t> bits;
      bits.push_back(static_cast<std::uint8_t>(color[x]));
      append_bits(x, bits);
      bool dup = false;
      for (auto& c : cands)
        if (c.first == bits) {
          dup = true;
          break;
        }
      if (!dup) cands.emplace_back(std::move(bits), x);
    }
    std::sort(cands.begin(), cands.end());
    for (auto& [bits, x] : cands) {
      std::size_t mark = stream.size();
      append_bits(x, stream);
      bool viable = true;
      if (have_best) {
        // Lexicographic prune against the best complete stream.
        for (std::size_t i = mark; i < stream.size(); ++i) {
          if (stream[i] < best_stream[i]) break;
          if (stream[i] > best_stream[i]) {
            viable = false;
            break;
          }
        }
      }
      if (viable) {
        used[x] = true;
        perm.push_back(x);
        dfs();
        perm.pop_back();
        used[x] = false;
      }
      stream.resize(mark);
    }
  }
};

}  // namespace

std::vector<Mask> canonical_key(const Poset& p) {
  if (p.n == 0) return {};
  CanonSearch s(p);
  s.dfs();
  // Rebuild up-rows under the canonical relabeling.
  std::vector<int> pos(p.n);
  for (int d = 0; d < p.n; ++d) pos[s.best_perm[d]] = d;
  std::vector<Mask> key(p.n, 0);
  for (int d = 0; d < p.n; ++d)
    for (int y : mask_elems(p.up[s.best_perm[d]]))
      key[d] |= Mask{1} << pos[y];
  return key;
}

std::optional<std::vector<int>> find_order_iso(const Poset& a,
                                               const Poset& b) {
  if (a.n != b.n) return std::nullopt;
  int n = a.n;
  std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Mask> downa(n), downb(n);
  for (int x = 0; x < n; ++x) downa[x] = a.down_row(x);
  for (int x = 0; x < n; ++x) downb[x] = b.down_row(x);

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int x, int y) {
    if (ca[x] != cb[y]) return false;
    for (int x2 = 0; x2 < n; ++x2) {
      if (map[x2] < 0) continue;
      if (a.leq(x, x2) != b.leq(y, map[x2])) return false;
      if (a.leq(x2, x) != b.leq(map[x2], y)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return map;
}

bool order_isomorphic(const Poset& a, const Poset& b) {
  return find_order_iso(a, b).has_value();
}

}  // namespace uvlab
