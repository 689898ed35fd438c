#include "grodiag/kernels.hpp"

#include <atomic>

#include "grodiag/error.hpp"

namespace grodiag::kern {

namespace detail {

void axpy_modp_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                      std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = dst[i] + static_cast<std::uint64_t>(c) * src[i];
    dst[i] = static_cast<std::uint32_t>(z % p);
  }
}

void scale_modp_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = static_cast<std::uint64_t>(c) * dst[i];
    dst[i] = static_cast<std::uint32_t>(z % p);
  }
}

} // namespace detail

bool avx2_supported() {
#if defined(GRODIAG_HAVE_AVX2_TU) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

// p below this bound keeps x + c*y < 2^30, which the AVX2 Barrett step needs
constexpr std::uint32_t kAvx2MaxP = 1u << 15;

std::atomic<Impl> g_impl{Impl::auto_detect};

bool use_avx2(std::uint32_t p) {
#if defined(GRODIAG_HAVE_AVX2_TU)
  if (p >= kAvx2MaxP) return false;
  Impl impl = g_impl.load(std::memory_order_relaxed);
  if (impl == Impl::scalar) return false;
  static const bool available = avx2_supported();
  return available;
#else
  (void)p;
  return false;
#endif
}

} // namespace

void select_impl(Impl impl) {
  if (impl == Impl::avx2 && !avx2_supported())
    fail(Errc::input, "avx2 kernels are not available on this machine/build");
  g_impl.store(impl, std::memory_order_relaxed);
}

const char* active_impl_name() {
  if (g_impl.load(std::memory_order_relaxed) == Impl::scalar) return "scalar";
  return avx2_supported() ? "avx2" : "scalar";
}

void axpy_modp(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
               std::uint32_t p) {
#if defined(GRODIAG_HAVE_AVX2_TU)
  if (use_avx2(p)) {
    detail::axpy_modp_avx2(dst, src, c, n, p);
    return;
  }
#endif
  detail::axpy_modp_scalar(dst, src, c, n, p);
}

void scale_modp(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
#if defined(GRODIAG_HAVE_AVX2_TU)
  if (use_avx2(p)) {
    detail::scale_modp_avx2(dst, c, n, p);
    return;
  }
#endif
  detail::scale_modp_scalar(dst, c, n, p);
}

} // namespace grodiag::kern
