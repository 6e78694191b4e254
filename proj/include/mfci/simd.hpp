#pragma once

#include <cstddef>
#include <cstdint>

namespace mfci::simd {

// Shoup precomputation for multiplication by s modulo p (p < 2^31).
inline uint32_t shoup(uint32_t s, uint32_t p) { return static_cast<uint32_t>((uint64_t(s) << 32) / p); }

// dst[i] = (dst[i] + s * src[i]) mod p, entries in [0, p).
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n);
// dst[i] = (s * dst[i]) mod p.
void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n);

namespace scalar {
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n);
void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n);
void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n);
}  // namespace avx2

// "scalar" or "avx2". MFCI_SIMD=scalar forces the reference kernels.
const char* active_kernel();
void force_kernel(const char* name);

}  // namespace mfci::simd
