#include "uvlab/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "uvlab/errors.hpp"

namespace uvlab::kernels {
namespace {

std::atomic<const Kernel*> g_active{nullptr};

const Kernel* pick_default() {
  if (const char* env = std::getenv("UVLAB_KERNEL")) {
    std::string want(env);
    if (want == "scalar") return &scalar_kernel();
    if (want == "avx2" && avx2_kernel()) return avx2_kernel();
    // Unknown or unavailable names in the environment fall back to the
    // best variant rather than aborting library users.
  }
  if (const Kernel* k = avx2_kernel()) return k;
  return &scalar_kernel();
}

}  // namespace

const Kernel& active() {
  const Kernel* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void select(const std::string& name) {
  if (name == "scalar") {
    g_active.store(&scalar_kernel(), std::memory_order_release);
    return;
  }
  if (name == "avx2") {
    if (const Kernel* k = avx2_kernel()) {
      g_active.store(k, std::memory_order_release);
      return;
    }
    throw input_error("KernelUnavailable", "avx2 is not supported here");
  }
  throw input_error("KernelUnavailable", "unknown kernel: " + name);
}

}  // namespace uvlab::kernels
