#include "uvlab/kernels.hpp"

namespace uvlab::kernels {
namespace {

void cl_le_scalar(const Mask* up, int n, const Mask* in, Mask* out,
                  std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Mask u = in[i], acc = 0;
    for (int x = 0; x < n; ++x) acc |= Mask{(up[x] & u) != 0} << x;
    out[i] = acc;
  }
}

void int_le_scalar(const Mask* up, int n, const Mask* in, Mask* out,
                   std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Mask u = in[i], acc = 0;
    for (int x = 0; x < n; ++x) acc |= Mask{(up[x] & ~u) == 0} << x;
    out[i] = acc;
  }
}

void neg_le_scalar(const Mask* up, int n, const Mask* in, Mask* out,
                   std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Mask u = in[i], acc = 0;
    for (int x = 0; x < n; ++x) acc |= Mask{(up[x] & u) == 0} << x;
    out[i] = acc;
  }
}

void upset_flags_scalar(const Mask* up, int n, const Mask* in,
                        std::uint8_t* flags, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Mask u = in[i];
    bool ok = true;
    for (int x = 0; x < n; ++x)
      ok &= !((u >> x) & 1) || (up[x] & ~u) == 0;
    flags[i] = ok ? 1 : 0;
  }
}

void ro_upset_flags_scalar(const Mask* up, int n, const Mask* in,
                           std::uint8_t* flags, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Mask u = in[i], cl = 0;
    bool up_ok = true;
    for (int x = 0; x < n; ++x) {
      cl |= Mask{(up[x] & u) != 0} << x;
      up_ok &= !((u >> x) & 1) || (up[x] & ~u) == 0;
    }
    Mask intcl = 0;
    for (int x = 0; x < n; ++x) intcl |= Mask{(up[x] & ~cl) == 0} << x;
    flags[i] = (up_ok && intcl == u) ? 1 : 0;
  }
}

}  // namespace

const Kernel& scalar_kernel() {
  static const Kernel k{"scalar",           cl_le_scalar,
                        int_le_scalar,      neg_le_scalar,
                        upset_flags_scalar, ro_upset_flags_scalar};
  return k;
}

}  // namespace uvlab::kernels
