#include <cstdlib>
#include <cstring>

#include "mfci/simd.hpp"

namespace mfci::simd {

#ifndef MFCI_HAVE_AVX2
namespace avx2 {
bool available() { return false; }
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n) {
  scalar::axpy_mod(dst, src, s, p, n);
}
void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n) { scalar::scale_mod(dst, s, p, n); }
}  // namespace avx2
#endif

namespace {

using Axpy = void (*)(uint32_t*, const uint32_t*, uint32_t, uint32_t, size_t);
using Scale = void (*)(uint32_t*, uint32_t, uint32_t, size_t);

struct Table {
  Axpy axpy;
  Scale scale;
  const char* name;
};

Table pick(const char* want) {
  bool scalar_only = want && std::strcmp(want, "scalar") == 0;
  if (!scalar_only && avx2::available()) return {avx2::axpy_mod, avx2::scale_mod, "avx2"};
  return {scalar::axpy_mod, scalar::scale_mod, "scalar"};
}

Table& table() {
  static Table t = pick(std::getenv("MFCI_SIMD"));
  return t;
}

}  // namespace

void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t s, uint32_t p, size_t n) {
  table().axpy(dst, src, s, p, n);
}

void scale_mod(uint32_t* dst, uint32_t s, uint32_t p, size_t n) { table().scale(dst, s, p, n); }

const char* active_kernel() { return table().name; }

void force_kernel(const char* name) { table() = pick(name); }

}  // namespace mfci::simd
