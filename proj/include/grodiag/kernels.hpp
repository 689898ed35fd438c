#pragma once

#include <cstddef>
#include <cstdint>

// Dense mod-p vector kernels backing the finite-field matrix routines.
// A scalar reference implementation always exists; on x86-64 an AVX2
// variant is compiled in and picked at runtime when the CPU supports it.
//
// Contract: entries of dst/src and the scalar c are canonical (< p), p is
// prime and < 2^31. The AVX2 path handles p < 2^15 and the dispatcher
// silently falls back to scalar for larger p.

namespace grodiag::kern {

enum class Impl { auto_detect, scalar, avx2 };

// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_modp(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
               std::uint32_t p);

// dst[i] = (c * dst[i]) mod p
void scale_modp(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);

bool avx2_supported();
const char* active_impl_name();
// Force an implementation (tests); Impl::avx2 throws when unsupported.
void select_impl(Impl impl);

namespace detail {

void axpy_modp_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                      std::uint32_t p);
void scale_modp_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);

#if defined(GRODIAG_HAVE_AVX2_TU)
void axpy_modp_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                    std::uint32_t p);
void scale_modp_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
#endif

} // namespace detail

} // namespace grodiag::kern
