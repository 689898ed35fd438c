#include <immintrin.h>

#include "grodiag/kernels.hpp"

// 8-lane mod-p arithmetic on uint32 values. Requires p < 2^15 so that
// x + c*y < 2^30. Reduction is a Barrett step with M = floor(2^32 / p):
// q = mulhi32(z, M) satisfies q in {floor(z/p)-1, floor(z/p)}, so one
// conditional subtract canonicalizes.

namespace grodiag::kern::detail {

namespace {

// high 32 bits of lane-wise u32 * u32 (multiplier broadcast in mv's even slots)
inline __m256i mulhi_epu32(__m256i z, __m256i mv) {
  __m256i prod_even = _mm256_mul_epu32(z, mv);
  __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(z, 32), mv);
  return _mm256_blend_epi32(_mm256_srli_epi64(prod_even, 32), prod_odd, 0b10101010);
}

inline __m256i barrett_reduce(__m256i z, __m256i mv, __m256i pv) {
  __m256i q = mulhi_epu32(z, mv);
  __m256i r = _mm256_sub_epi32(z, _mm256_mullo_epi32(q, pv));
  // subtract p once where r >= p
  __m256i ge = _mm256_cmpeq_epi32(_mm256_min_epu32(r, pv), pv);
  return _mm256_sub_epi32(r, _mm256_and_si256(ge, pv));
}

} // namespace

void axpy_modp_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                    std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>((1ull << 32) / p);
  const __m256i mv = _mm256_set1_epi64x(m);
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i z = _mm256_add_epi32(x, _mm256_mullo_epi32(cv, y));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(z, mv, pv));
  }
  if (i < n) axpy_modp_scalar(dst + i, src + i, c, n - i, p);
}

void scale_modp_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>((1ull << 32) / p);
  const __m256i mv = _mm256_set1_epi64x(m);
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i z = _mm256_mullo_epi32(cv, x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(z, mv, pv));
  }
  if (i < n) scale_modp_scalar(dst + i, c, n - i, p);
}

} // namespace grodiag::kern::detail
