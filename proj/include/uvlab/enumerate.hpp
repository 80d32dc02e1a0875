#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "uvlab/poset.hpp"

namespace uvlab {

// Streams every labeled poset on exactly n elements as successor rows, in
// a fixed deterministic order.  The rows are valid by construction.
void for_each_labeled_poset(
    int n, const std::function<void(const std::vector<Mask>&)>& fn);

std::uint64_t count_labeled_posets(int n);

// Independent oracle: filters all 2^(n(n-1)) reflexive relations for
// antisymmetry and transitivity.  Practical only for n <= 4.
std::uint64_t count_posets_by_relation_filter(int n);

// Materialized enumeration over all sizes 1..max_n, optionally
// deduplicated up to isomorphism via canonical keys.  SizeLimit beyond the
// configured bounds.
std::vector<Poset> enumerate_posets(int max_n, bool dedup_iso);

}  // namespace uvlab
