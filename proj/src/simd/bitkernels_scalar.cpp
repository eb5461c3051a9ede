#include "meetless/simd/bitkernels.hpp"

#include <bit>

namespace meetless::simd {
namespace {

void and_into(Word* dst, Word const* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void or_into(Word* dst, Word const* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_to(Word* dst, Word const* a, Word const* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

bool is_subset(Word const* a, Word const* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool equal(Word const* a, Word const* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool intersects(Word const* a, Word const* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

std::size_t popcount(Word const* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

std::size_t and_popcount(Word const* a, Word const* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace

Kernels const& scalar_kernels() {
  static constexpr Kernels k{Isa::scalar, and_into,   or_into, and_to,
                             is_subset,   equal,      intersects,
                             popcount,    and_popcount};
  return k;
}

}  // namespace meetless::simd
