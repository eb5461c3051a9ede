#include "meetless/simd/bitkernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace meetless::simd {
namespace {

void and_into(Word* dst, Word const* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void or_into(Word* dst, Word const* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_to(Word* dst, Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

inline bool any_lane(uint64x2_t v) {
  return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0;
}

bool is_subset(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (any_lane(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool equal(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (any_lane(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool intersects(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (any_lane(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

inline std::size_t count_vec(uint64x2_t v) {
  return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::size_t popcount(Word const* a, std::size_t n) {
  std::size_t c = 0, i = 0;
  for (; i + 2 <= n; i += 2) c += count_vec(vld1q_u64(a + i));
  for (; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

std::size_t and_popcount(Word const* a, Word const* b, std::size_t n) {
  std::size_t c = 0, i = 0;
  for (; i + 2 <= n; i += 2) {
    c += count_vec(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

}  // namespace

Kernels const* neon_kernels() {
  static Kernels const k{Isa::neon, and_into,   or_into, and_to,
                         is_subset, equal,      intersects,
                         popcount,  and_popcount};
  return &k;
}

}  // namespace meetless::simd

#else

namespace meetless::simd {
Kernels const* neon_kernels() { return nullptr; }
}  // namespace meetless::simd

#endif
