#include <cstdlib>
#include <string_view>

#include "zeta/kernels/kernels.hpp"

namespace rzeta::simd {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("ZETA_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels(); t != nullptr && cpu_supports_avx2()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace rzeta::simd
