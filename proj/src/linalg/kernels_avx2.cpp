#include <immintrin.h>

#include "mfci/simd.hpp"

namespace mfci::simd::avx2 {

bool available() { return __builtin_cpu_supports("avx2"); }

// High 32 bits of the 8 lane-wise 32x32 products.
static inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

static inline __m256i mulmod(__m256i x, __m256i s, __m256i sp, __m256i p) {
  __m256i q = mulhi_epu32(x, sp);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, s), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n) {
  if (s == 0) return;
  uint32_t spv = shoup(s, p);
  __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  __m256i vsp = _mm256_set1_epi32(static_cast<int>(spv));
  __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_add_epi32(d, mulmod(x, vs, vsp, vp));
    t = _mm256_min_epu32(t, _mm256_sub_epi32(t, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  if (i < n) scalar::axpy_mod(dst + i, src + i, s, p, n - i);
}

void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n) {
  uint32_t spv = shoup(s, p);
  __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  __m256i vsp = _mm256_set1_epi32(static_cast<int>(spv));
  __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mulmod(x, vs, vsp, vp));
  }
  if (i < n) scalar::scale_mod(dst + i, s, p, n - i);
}

}  // namespace mfci::simd::avx2
