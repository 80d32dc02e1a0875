#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace uvlab {

// Subsets of a carrier with at most 64 elements are stored as bit masks.
// Bit i corresponds to the element with id i.
using Mask = std::uint64_t;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr bool mask_has(Mask m, int i) { return (m >> i) & 1u; }

constexpr int mask_size(Mask m) { return std::popcount(m); }

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Lowest set bit index; undefined for 0.
constexpr int mask_min(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_elems(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(std::popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Canonical order on set families: by size, then numerically (which is
// lexicographic on sorted element lists for masks over the same carrier).
inline bool mask_canonical_less(Mask a, Mask b) {
  int sa = mask_size(a), sb = mask_size(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

// Iterates all subsets of `of`, ascending in the submask order, including 0
// and `of` itself.  Usage: for (Mask s = 0;; s = next_submask(s, of)) { ...
// if (s == of) break; }
constexpr Mask next_submask(Mask s, Mask of) { return (s - of) & of; }

}  // namespace uvlab
