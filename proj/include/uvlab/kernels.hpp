#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "uvlab/masks.hpp"

namespace uvlab::kernels {

// Batch kernels over arrays of candidate subsets of one fixed poset.
//
// The poset is given by its successor rows: up[x] is the mask of all y with
// x <= y (including x itself).  Every kernel is branch-free per candidate, so
// the same loop runs as a scalar reference and as a SIMD variant processing
// several candidates per step.  Semantics, for a candidate mask U:
//
//   cl_le(U)   : bit x set iff up[x] & U != 0          (some successor in U)
//   int_le(U)  : bit x set iff up[x] & ~U == 0         (all successors in U)
//   neg_le(U)  : bit x set iff up[x] & U == 0          (no successor in U)
//   upset(U)   : U closed upward: x in U implies up[x] subset of U
//   ro_upset(U): upset(U) and U == int_le(cl_le(U))
struct Kernel {
  const char* name;
  void (*cl_le)(const Mask* up, int n, const Mask* in, Mask* out,
                std::size_t count);
  void (*int_le)(const Mask* up, int n, const Mask* in, Mask* out,
                 std::size_t count);
  void (*neg_le)(const Mask* up, int n, const Mask* in, Mask* out,
                 std::size_t count);
  void (*upset_flags)(const Mask* up, int n, const Mask* in,
                      std::uint8_t* flags, std::size_t count);
  void (*ro_upset_flags)(const Mask* up, int n, const Mask* in,
                         std::uint8_t* flags, std::size_t count);
};

const Kernel& scalar_kernel();

bool avx2_available();
// Null when this build has no AVX2 variant or the CPU lacks AVX2.
const Kernel* avx2_kernel();

// The kernel all callers go through.  Defaults to the best available
// variant; UVLAB_KERNEL=scalar|avx2 in the environment overrides, as does
// select().  select() throws on an unknown or unavailable name.
const Kernel& active();
void select(const std::string& name);

}  // namespace uvlab::kernels
