#include <atomic>
#include <cstdlib>
#include <string>

#include "meetless/simd/bitkernels.hpp"

namespace meetless::simd {
namespace {

Kernels const* pick() {
  if (char const* env = std::getenv("MEETLESS_SIMD")) {
    if (std::string(env) == "scalar") return &scalar_kernels();
  }
  if (auto const* k = avx2_kernels()) return k;
  if (auto const* k = neon_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<Kernels const*>& slot() {
  static std::atomic<Kernels const*> s{pick()};
  return s;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Kernels const& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(Kernels const& k) {
  slot().store(&k, std::memory_order_relaxed);
}

}  // namespace meetless::simd
