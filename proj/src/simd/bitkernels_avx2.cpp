#include "meetless/simd/bitkernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#define MEETLESS_AVX2 __attribute__((target("avx2,popcnt")))

namespace meetless::simd {
namespace {

MEETLESS_AVX2 inline __m256i load(Word const* p) {
  return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
}

MEETLESS_AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble lookup popcount (Mula); per-64-bit lane sums via sad_epu8.
MEETLESS_AVX2 inline __m256i popcount_lanes(__m256i v) {
  __m256i const lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  __m256i const low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

MEETLESS_AVX2 inline std::size_t hsum(__m256i acc) {
  return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
}

MEETLESS_AVX2 void and_into(Word* dst, Word const* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

MEETLESS_AVX2 void or_into(Word* dst, Word const* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

MEETLESS_AVX2 void and_to(Word* dst, Word const* a, Word const* b,
                          std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

MEETLESS_AVX2 bool is_subset(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

MEETLESS_AVX2 bool equal(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

MEETLESS_AVX2 bool intersects(Word const* a, Word const* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

MEETLESS_AVX2 std::size_t popcount(Word const* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  }
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c;
}

MEETLESS_AVX2 std::size_t and_popcount(Word const* a, Word const* b,
                                       std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(
        acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t c = hsum(acc);
  for (; i < n; ++i) {
    c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  }
  return c;
}

}  // namespace

Kernels const* avx2_kernels() {
  static Kernels const k{Isa::avx2, and_into,   or_into, and_to,
                         is_subset, equal,      intersects,
                         popcount,  and_popcount};
  static bool const supported = __builtin_cpu_supports("avx2") &&
                                __builtin_cpu_supports("popcnt");
  return supported ? &k : nullptr;
}

}  // namespace meetless::simd

#else

namespace meetless::simd {
Kernels const* avx2_kernels() { return nullptr; }
}  // namespace meetless::simd

#endif
