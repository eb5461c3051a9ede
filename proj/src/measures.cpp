#include "meetless/measures.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "meetless/chain.hpp"
#include "meetless/error.hpp"
#include "meetless/refinement.hpp"

namespace meetless {

std::optional<MeasureViolation> find_measure_violation(PosetMeasure const& m) {
  std::size_t const n = m.size();
  if (m.mu.size() != n * n) {
    throw Error(ErrorKind::parse_error, "measure table is not total");
  }
  auto const& ext = *m.ext;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (m.poset.leq(x, y) && !ext.is_zero(m.at(x, y))) {
        return MeasureViolation{MeasureViolation::Kind::nonzero_on_comparable,
                                x, y, 0};
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (!ext.leq(m.at(x, z), ext.join(m.at(x, y), m.at(y, z)))) {
          return MeasureViolation{MeasureViolation::Kind::triangle, x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Decomposition> find_decomposition(PosetMeasure const& m,
                                                ElementId x, ElementId y,
                                                FreeElement const& a,
                                                FreeElement const& b,
                                                VMeasureLimits limits) {
  std::size_t const n = m.size();
  if (x >= n || y >= n) {
    throw Error(ErrorKind::index_out_of_poset, "element outside the poset");
  }
  if (!m.poset.leq(x, y)) return std::nullopt;
  auto const& ext = *m.ext;
  auto side_of = [&](ElementId from, ElementId to) -> std::optional<Side> {
    auto const& v = m.at(to, from);
    if (ext.leq(v, a)) return Side::a;
    if (ext.leq(v, b)) return Side::b;
    return std::nullopt;
  };
  if (x == y) {
    if (auto s = side_of(x, x)) return Decomposition{{x, x}, {*s}};
    return std::nullopt;
  }
  BitSet interval(n);
  simd::and_to(interval.words(), m.poset.up_sets().row(x),
               m.poset.down_sets().row(y));
  auto const members = interval.members();
  if (members.size() > limits.max_interval) {
    throw Error(ErrorKind::search_space_too_large,
                "interval of " + std::to_string(members.size()) +
                    " elements exceeds the bound " +
                    std::to_string(limits.max_interval),
                {m.poset.name(x), m.poset.name(y)});
  }
  // Strictly increasing steps keep chains repetition-free, so plain
  // reachability in the interval decides existence.
  std::vector<std::int64_t> parent(n, -1);
  std::vector<Side> via(n, Side::a);
  std::deque<ElementId> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    ElementId const z = queue.front();
    queue.pop_front();
    if (z == y) break;
    for (auto w : members) {
      if (parent[w] >= 0 || !m.poset.less(z, w)) continue;
      if (auto s = side_of(z, w)) {
        parent[w] = z;
        via[w] = *s;
        queue.push_back(w);
      }
    }
  }
  if (parent[y] < 0) return std::nullopt;
  Decomposition d;
  for (ElementId z = y; z != x; z = static_cast<ElementId>(parent[z])) {
    d.chain.push_back(z);
    d.sides.push_back(via[z]);
  }
  d.chain.push_back(x);
  std::reverse(d.chain.begin(), d.chain.end());
  std::reverse(d.sides.begin(), d.sides.end());
  return d;
}

std::vector<ValuePair> default_value_pairs(PosetMeasure const& m) {
  if (!m.default_pairs.empty()) return m.default_pairs;
  auto const codes = m.ext->base().elements();
  if (!codes) {
    throw Error(ErrorKind::hypothesis_violated,
                "value semilattice is not enumerable; supply (a, b) pairs");
  }
  std::vector<ValuePair> out;
  for (auto a : *codes) {
    for (auto b : *codes) {
      out.emplace_back(FreeElement::base(a), FreeElement::base(b));
    }
  }
  return out;
}

std::optional<FailureWitness> find_v_measure_failure(
    PosetMeasure const& m, std::span<ValuePair const> pairs,
    VMeasureLimits limits) {
  std::size_t const n = m.size();
  auto const& ext = *m.ext;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = static_cast<ElementId>(n); y-- > 0;) {
      if (x == y || !m.poset.leq(x, y)) continue;
      auto const& v = m.at(y, x);
      for (auto const& [a, b] : pairs) {
        if (!ext.leq(v, ext.join(a, b))) continue;
        if (!find_decomposition(m, x, y, a, b, limits)) {
          return FailureWitness{x, y, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<FailureWitness> find_v_measure_failure(PosetMeasure const& m,
                                                     VMeasureLimits limits) {
  auto const pairs = default_value_pairs(m);
  return find_v_measure_failure(m, pairs, limits);
}

PosetMeasure counterexample_measure(std::uint32_t n, std::uint32_t depth) {
  if (n < 1) throw Error(ErrorKind::too_short, "the chain needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId i = 0; i <= n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  PosetMeasure m;
  m.poset = FinitePoset::from_pairs(std::move(names), pairs);
  m.ext = chain_extension_ptr();
  m.depth = depth;
  auto const& ext = *m.ext;
  for (ElementId xi = 0; xi <= n; ++xi) {
    for (ElementId eta = 0; eta <= n; ++eta) {
      Code c = chain::zero();
      if (eta < xi) c = xi < n ? chain::c(xi) : chain::ab();
      m.mu.push_back(ext.element(c));
    }
  }
  m.default_pairs = {{ext.element(chain::a()), ext.element(chain::b())}};
  return m;
}

std::vector<std::uint64_t> default_extension_indices(PosetMeasure const& mbar) {
  std::optional<std::uint64_t> top;
  for (auto const& name : mbar.poset.names()) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
    if (ec == std::errc{} && ptr == name.data() + name.size()) {
      top = top ? std::max(*top, v) : v;
    }
  }
  std::vector<std::uint64_t> out;
  if (top) {
    for (std::uint64_t i = 1; i < *top; ++i) out.push_back(i);
  }
  return out;
}

SequencePattern extension_sequences(PosetMeasure const& mbar,
                                    std::span<ElementId const> chain,
                                    std::span<std::uint64_t const> indices) {
  if (dynamic_cast<ChainBase const*>(&mbar.ext->base()) == nullptr) {
    throw Error(ErrorKind::hypothesis_violated,
                "extension sequences need a measure valued in F(Λ)");
  }
  std::size_t const size = mbar.size();
  if (chain.empty()) throw Error(ErrorKind::too_short, "empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= size) {
      throw Error(ErrorKind::index_out_of_poset,
                  "chain element " + std::to_string(chain[i]) +
                      " is not in the poset");
    }
    if (i > 0 && !mbar.poset.leq(chain[i - 1], chain[i])) {
      throw Error(ErrorKind::hypothesis_violated,
                  "chain is not increasing in the poset",
                  {mbar.poset.name(chain[i - 1]), mbar.poset.name(chain[i])});
    }
  }
  auto const& ext = *mbar.ext;
  SequencePattern sp;
  sp.ext = mbar.ext;
  sp.a = ext.element(chain::a());
  sp.b = ext.element(chain::b());
  std::vector<ElementId> cols;
  for (auto xi : indices) {
    auto id = mbar.poset.find(std::to_string(xi));
    if (!id) {
      throw Error(ErrorKind::index_out_of_poset,
                  "index " + std::to_string(xi) + " is not an element of P",
                  {std::to_string(xi)});
    }
    cols.push_back(*id);
    sp.indices.push_back(xi);
    sp.c.push_back(ext.element(chain::c(xi)));
  }
  std::size_t const n = chain.size() - 1;
  sp.x.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (auto col : cols) sp.x[i].push_back(mbar.at(col, chain[n - i]));
  }
  return sp;
}

}  // namespace meetless
