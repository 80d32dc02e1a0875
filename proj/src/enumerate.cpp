#include "uvlab/enumerate.hpp"

#include <map>
#include <set>

#include "uvlab/errors.hpp"
#include "uvlab/limits.hpp"

namespace uvlab {

namespace {

// Row-by-row DFS: up[i] is chosen with i set; constraints against already
// fixed rows j < i are (a) antisymmetry of the pair and (b) transitivity
// through the pair in both directions.  Relations to rows > i resolve when
// those rows are fixed, so checking each pair once at the larger index
// covers every triple.
struct PosetDfs {
  int n;
  const std::function<void(const std::vector<Mask>&)>& fn;
  std::vector<Mask> up;

  PosetDfs(int n_, const std::function<void(const std::vector<Mask>&)>& f)
      : n(n_), fn(f), up(n_, 0) {}

  bool consistent(int i) const {
    for (int j = 0; j < i; ++j) {
      bool ij = mask_has(up[i], j), ji = mask_has(up[j], i);
      if (ij && ji) return false;
      if (ij && (up[j] & ~up[i])) return false;
      if (ji && (up[i] & ~up[j])) return false;
    }
    return true;
  }

  void run(int i) {
    if (i == n) {
      fn(up);
      return;
    }
    Mask self = Mask{1} << i;
    for (Mask row = 0; row < (Mask{1} << n); ++row) {
      if (!(row & self)) continue;
      up[i] = row;
      if (consistent(i)) run(i + 1);
    }
    up[i] = 0;
  }
};

}  // namespace

void for_each_labeled_poset(
    int n, const std::function<void(const std::vector<Mask>&)>& fn) {
  if (n < 1 || n > 10) throw SizeLimit("labeled sweep supports 1..10 elements");
  PosetDfs dfs(n, fn);
  dfs.run(0);
}

std::uint64_t count_labeled_posets(int n) {
  std::uint64_t count = 0;
  for_each_labeled_poset(n, [&](const std::vector<Mask>&) { ++count; });
  return count;
}

std::uint64_t count_posets_by_relation_filter(int n) {
  if (n < 1 || n > 4)
    throw SizeLimit("the relation filter oracle supports 1..4 elements");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::uint64_t count = 0;
  for (Mask bits = 0; bits < (Mask{1} << slots.size()); ++bits) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = Mask{1} << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask_has(bits, static_cast<int>(s)))
        up[slots[s].first] |= Mask{1} << slots[s].second;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && mask_has(up[i], j) && mask_has(up[j], i)) ok = false;
        if (mask_has(up[i], j) && (up[j] & ~up[i])) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::vector<Poset> enumerate_posets(int max_n, bool dedup_iso) {
  int cap = dedup_iso ? limits().max_poset_iso : limits().max_poset_labeled;
  if (max_n < 1 || max_n > cap)
    throw SizeLimit("poset enumeration capped at " + std::to_string(cap) +
                    (dedup_iso ? " (up to isomorphism)" : " (labeled)"));
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::vector<Mask>> seen;
    for_each_labeled_poset(n, [&](const std::vector<Mask>& up) {
      if (dedup_iso) {
        Poset p;
        p.n = n;
        p.up = up;
        p.labels.resize(n);
        for (int i = 0; i < n; ++i) p.labels[i] = "p" + std::to_string(i);
        std::vector<Mask> key = canonical_key(p);
        if (!seen.insert(key).second) return;
        out.push_back(poset_from_up_rows(key));
      } else {
        out.push_back(poset_from_up_rows(up));
      }
    });
  }
  return out;
}

}  // namespace uvlab
