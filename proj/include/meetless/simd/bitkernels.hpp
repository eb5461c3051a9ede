#pragma once

// Word-parallel kernels over packed bit rows. Every relation in the library
// (orders, up-sets, interval masks) is a row of 64-bit words, and the
// exhaustive checks spend nearly all of their time in these loops.
//
// Each kernel has a scalar reference version and, where the CPU allows, a
// vector version (AVX2 on x86-64, NEON on AArch64). The vector table is
// picked once at startup; MEETLESS_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace meetless::simd {

using Word = std::uint64_t;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct Kernels {
  Isa isa;
  // dst &= src
  void (*and_into)(Word* dst, Word const* src, std::size_t n);
  // dst |= src
  void (*or_into)(Word* dst, Word const* src, std::size_t n);
  // dst = a & b
  void (*and_to)(Word* dst, Word const* a, Word const* b, std::size_t n);
  // (a & ~b) == 0
  bool (*is_subset)(Word const* a, Word const* b, std::size_t n);
  bool (*equal)(Word const* a, Word const* b, std::size_t n);
  // (a & b) != 0
  bool (*intersects)(Word const* a, Word const* b, std::size_t n);
  std::size_t (*popcount)(Word const* a, std::size_t n);
  std::size_t (*and_popcount)(Word const* a, Word const* b, std::size_t n);
};

Kernels const& scalar_kernels();

// nullptr when the variant is not compiled in or the CPU lacks it.
Kernels const* avx2_kernels();
Kernels const* neon_kernels();

// The table used by the span wrappers below.
Kernels const& active();

// Override the active table (tests use this to pin a variant).
void set_active(Kernels const& k);

inline void and_into(std::span<Word> dst, std::span<Word const> src) {
  active().and_into(dst.data(), src.data(), dst.size());
}
inline void or_into(std::span<Word> dst, std::span<Word const> src) {
  active().or_into(dst.data(), src.data(), dst.size());
}
inline void and_to(std::span<Word> dst, std::span<Word const> a,
                   std::span<Word const> b) {
  active().and_to(dst.data(), a.data(), b.data(), dst.size());
}
inline bool is_subset(std::span<Word const> a, std::span<Word const> b) {
  return active().is_subset(a.data(), b.data(), a.size());
}
inline bool equal(std::span<Word const> a, std::span<Word const> b) {
  return active().equal(a.data(), b.data(), a.size());
}
inline bool intersects(std::span<Word const> a, std::span<Word const> b) {
  return active().intersects(a.data(), b.data(), a.size());
}
inline std::size_t popcount(std::span<Word const> a) {
  return active().popcount(a.data(), a.size());
}
inline std::size_t and_popcount(std::span<Word const> a,
                                std::span<Word const> b) {
  return active().and_popcount(a.data(), b.data(), a.size());
}

}  // namespace meetless::simd
