#include "mfci/simd.hpp"

namespace mfci::simd::scalar {

static inline uint32_t mulmod_shoup(uint32_t x, uint32_t s, uint32_t sp, uint32_t p) {
  uint32_t q = static_cast<uint32_t>((uint64_t(x) * sp) >> 32);
  uint32_t r = x * s - q * p;
  return r >= p ? r - p : r;
}

void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n) {
  if (s == 0) return;
  uint32_t sp = shoup(s, p);
  for (size_t i = 0; i < n; ++i) {
    uint32_t t = dst[i] + mulmod_shoup(src[i], s, sp, p);
    dst[i] = t >= p ? t - p : t;
  }
}

void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n) {
  uint32_t sp = shoup(s, p);
  for (size_t i = 0; i < n; ++i) dst[i] = mulmod_shoup(dst[i], s, sp, p);
}

}  // namespace mfci::simd::scalar
