#include "meetless/sampling.hpp"

#include <algorithm>

namespace meetless {
namespace {

template <class T>
T const& pick(Rng& rng, std::span<T const> xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

FreeElement grow(Rng& rng, FreeExtension const& ext,
                 std::span<Code const> atoms, SampleShape shape, int budget) {
  std::uniform_int_distribution<int> op(0, 5);
  int const o = budget <= 0 ? 0 : op(rng);
  if (o <= 1) return ext.element(pick(rng, atoms));
  auto u = grow(rng, ext, atoms, shape, budget - 1);
  auto v = grow(rng, ext, atoms, shape, budget - 1);
  if (o <= 3) return ext.join(u, v);
  auto const top = ext.join(u, v);
  std::vector<FreeElement> ws{u, v, top};
  for (auto c : atoms) {
    auto a = ext.element(c);
    if (ext.leq(a, top)) ws.push_back(a);
  }
  auto const& w = pick(rng, std::span<FreeElement const>(ws));
  if (std::max({u.rank(), v.rank(), w.rank()}) + 1 > shape.max_rank) {
    return top;
  }
  return ext.bowtie(u, v, w);
}

}  // namespace

FreeElement random_element(Rng& rng, FreeExtension const& ext,
                           std::span<Code const> atoms, SampleShape shape) {
  for (;;) {
    auto x = grow(rng, ext, atoms, shape, 3);
    if (complexity(x) <= shape.max_complexity && x.rank() <= shape.max_rank) {
      return x;
    }
  }
}

std::vector<FreeElement> base_bowties(FreeExtension const& ext,
                                      std::span<Code const> carrier) {
  auto const& base = ext.base();
  std::vector<FreeElement> out;
  Code const zero = base.zero();
  for (auto u : carrier) {
    for (auto v : carrier) {
      if (u == v || u == zero || v == zero) continue;
      Code const top = base.join(u, v);
      for (auto w : carrier) {
        if (w == zero || !base.leq(w, top)) continue;
        out.push_back(
            ext.bowtie(ext.element(u), ext.element(v), ext.element(w)));
      }
    }
  }
  return out;
}

std::vector<ChainIndex> random_index_set(Rng& rng, ChainIndex universe,
                                         double p) {
  std::bernoulli_distribution keep(p);
  std::vector<ChainIndex> out;
  for (ChainIndex i = 0; i < universe; ++i) {
    if (keep(rng)) out.push_back(i);
  }
  return out;
}

}  // namespace meetless
