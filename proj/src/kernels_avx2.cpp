#include "uvlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define UVLAB_AVX2 __attribute__((target("avx2")))

namespace uvlab::kernels {
namespace {

// Each vector step handles 4 candidate masks (4 x 64-bit lanes).  Tails of
// fewer than 4 candidates fall back to the scalar reference.

UVLAB_AVX2 void cl_le_avx2(const Mask* up, int n, const Mask* in, Mask* out,
                           std::size_t count) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i acc = zero;
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i hit0 = _mm256_cmpeq_epi64(_mm256_and_si256(u, ups), zero);
      acc = _mm256_or_si256(acc, _mm256_andnot_si256(hit0, bit));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < count) scalar_kernel().cl_le(up, n, in + i, out + i, count - i);
}

UVLAB_AVX2 void int_le_avx2(const Mask* up, int n, const Mask* in, Mask* out,
                            std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i acc = _mm256_setzero_si256();
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i sub = _mm256_cmpeq_epi64(_mm256_and_si256(u, ups), ups);
      acc = _mm256_or_si256(acc, _mm256_and_si256(sub, bit));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < count) scalar_kernel().int_le(up, n, in + i, out + i, count - i);
}

UVLAB_AVX2 void neg_le_avx2(const Mask* up, int n, const Mask* in, Mask* out,
                            std::size_t count) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i acc = zero;
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i miss = _mm256_cmpeq_epi64(_mm256_and_si256(u, ups), zero);
      acc = _mm256_or_si256(acc, _mm256_and_si256(miss, bit));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < count) scalar_kernel().neg_le(up, n, in + i, out + i, count - i);
}

UVLAB_AVX2 void upset_flags_avx2(const Mask* up, int n, const Mask* in,
                                 std::uint8_t* flags, std::size_t count) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i viol = zero;
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i out0 = _mm256_cmpeq_epi64(_mm256_and_si256(u, bit), zero);
      __m256i sub = _mm256_cmpeq_epi64(_mm256_andnot_si256(u, ups), zero);
      // violation: x in U and up[x] not a subset of U
      viol = _mm256_or_si256(viol,
                             _mm256_andnot_si256(_mm256_or_si256(out0, sub),
                                                 _mm256_set1_epi64x(-1)));
    }
    int ok = _mm256_movemask_epi8(_mm256_cmpeq_epi64(viol, zero));
    for (int j = 0; j < 4; ++j) flags[i + j] = (ok >> (8 * j)) & 1;
  }
  if (i < count)
    scalar_kernel().upset_flags(up, n, in + i, flags + i, count - i);
}

UVLAB_AVX2 void ro_upset_flags_avx2(const Mask* up, int n, const Mask* in,
                                    std::uint8_t* flags, std::size_t count) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i cl = zero, viol = zero;
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i hit0 = _mm256_cmpeq_epi64(_mm256_and_si256(u, ups), zero);
      cl = _mm256_or_si256(cl, _mm256_andnot_si256(hit0, bit));
      __m256i out0 = _mm256_cmpeq_epi64(_mm256_and_si256(u, bit), zero);
      __m256i sub = _mm256_cmpeq_epi64(_mm256_andnot_si256(u, ups), zero);
      viol = _mm256_or_si256(
          viol, _mm256_andnot_si256(_mm256_or_si256(out0, sub), ones));
    }
    __m256i intcl = zero;
    for (int x = 0; x < n; ++x) {
      __m256i ups = _mm256_set1_epi64x(static_cast<long long>(up[x]));
      __m256i bit = _mm256_set1_epi64x(1LL << x);
      __m256i sub = _mm256_cmpeq_epi64(_mm256_andnot_si256(cl, ups), zero);
      intcl = _mm256_or_si256(intcl, _mm256_and_si256(sub, bit));
    }
    __m256i okm = _mm256_and_si256(_mm256_cmpeq_epi64(intcl, u),
                                   _mm256_cmpeq_epi64(viol, zero));
    int ok = _mm256_movemask_epi8(okm);
    for (int j = 0; j < 4; ++j) flags[i + j] = (ok >> (8 * j)) & 1;
  }
  if (i < count)
    scalar_kernel().ro_upset_flags(up, n, in + i, flags + i, count - i);
}

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const Kernel* avx2_kernel() {
  if (!avx2_available()) return nullptr;
  static const Kernel k{"avx2",           cl_le_avx2,
                        int_le_avx2,      neg_le_avx2,
                        upset_flags_avx2, ro_upset_flags_avx2};
  return &k;
}

}  // namespace uvlab::kernels

#else  // non-x86 builds have only the scalar reference

namespace uvlab::kernels {
bool avx2_available() { return false; }
const Kernel* avx2_kernel() { return nullptr; }
}  // namespace uvlab::kernels

#endif
