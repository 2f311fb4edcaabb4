#include "lfun/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lfun {

static const Kernels& select_kernels() {
  const char* env = std::getenv("LFUN_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
  if (avx2_supported()) return avx2_kernels();
#endif
  return scalar_kernels();
}

const Kernels& kernels() {
  static const Kernels& k = select_kernels();
  return k;
}

} // namespace lfun
