#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace qrf::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(QRF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool forced_scalar() noexcept {
  const char* env = std::getenv("QRF_KERNELS");
  return env != nullptr && std::string_view(env) == "scalar";
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", detail::sum_norm_sq_scalar, detail::scale_scalar,
                                 detail::flip_pair_weights_scalar};
  return table;
}

const KernelTable* avx2_table() noexcept {
#if defined(QRF_HAVE_AVX2)
  static const KernelTable table{"avx2", detail::sum_norm_sq_avx2, detail::scale_avx2,
                                 detail::flip_pair_weights_avx2};
  return cpu_has_avx2() ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    if (!forced_scalar()) {
      if (const KernelTable* t = avx2_table()) return *t;
    }
    return scalar_table();
  }();
  return chosen;
}

}  // namespace qrf::kernels
