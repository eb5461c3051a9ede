#include "meetless/order.hpp"

#include <algorithm>

#include "meetless/error.hpp"

namespace meetless {
namespace {

void check_partial_order(std::vector<std::string> const& names,
                         BitMatrix const& leq) {
  for (std::size_t x = 0; x < leq.size(); ++x) {
    if (!leq.test(x, x)) {
      throw Error(ErrorKind::not_a_partial_order,
                  "not reflexive at " + names[x], {names[x], names[x]});
    }
  }
  std::size_t i = 0, j = 0;
  if (leq.find_symmetric_pair(i, j)) {
    throw Error(ErrorKind::not_a_partial_order,
                "not antisymmetric: " + names[i] + " and " + names[j],
                {names[i], names[j]});
  }
  if (leq.find_transitivity_gap(i, j)) {
    throw Error(ErrorKind::not_a_partial_order,
                "not transitive: missing " + names[i] + " <= " + names[j],
                {names[i], names[j]});
  }
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> names,
                                       BitMatrix leq) {
  if (leq.size() != names.size()) {
    throw Error(ErrorKind::parse_error, "order matrix size mismatch");
  }
  FinitePoset p;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!p.index_.emplace(names[i], static_cast<ElementId>(i)).second) {
      throw Error(ErrorKind::parse_error, "duplicate element name " + names[i]);
    }
  }
  check_partial_order(names, leq);
  p.names_ = std::move(names);
  p.down_ = leq.transposed();
  p.up_ = std::move(leq);
  return p;
}

FinitePoset FinitePoset::from_pairs(
    std::vector<std::string> names,
    std::span<std::pair<ElementId, ElementId> const> pairs) {
  BitMatrix leq(names.size());
  for (auto [x, y] : pairs) {
    if (x >= names.size() || y >= names.size()) {
      throw Error(ErrorKind::unknown_element, "order pair out of range");
    }
    leq.set(x, y);
  }
  leq.close_reflexive_transitive();
  return from_relation(std::move(names), std::move(leq));
}

std::optional<ElementId> FinitePoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FinitePoset::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorKind::unknown_element, "no element named " +
                                              std::string(name),
              {std::string(name)});
}

std::vector<std::pair<ElementId, ElementId>> FinitePoset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  std::size_t const n = size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      // strictly between: up(x) ∩ down(y) minus {x, y}
      bool between = simd::and_popcount(up_.row(x), down_.row(y)) > 2;
      if (!between) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<ElementId> lower_set(FinitePoset const& poset,
                                 std::span<ElementId const> xs) {
  BitSet acc(poset.size());
  for (auto x : xs) {
    if (x >= poset.size()) {
      throw Error(ErrorKind::unknown_element,
                  "element id " + std::to_string(x) + " not in poset");
    }
    simd::or_into(acc.words(), poset.down_sets().row(x));
  }
  return acc.members();
}

FiniteJoinSemilattice validate_semilattice(FinitePoset poset, ElementId zero,
                                           std::vector<ElementId> join_table) {
  std::size_t const n = poset.size();
  if (n == 0) throw Error(ErrorKind::no_zero, "empty carrier");
  if (join_table.size() != n * n) {
    throw Error(ErrorKind::parse_error, "join table is not total");
  }
  if (zero >= n) throw Error(ErrorKind::unknown_element, "zero not in carrier");
  for (ElementId x = 0; x < n; ++x) {
    if (!poset.leq(zero, x)) {
      throw Error(ErrorKind::no_zero,
                  poset.name(zero) + " is not below " + poset.name(x),
                  {poset.name(zero), poset.name(x)});
    }
  }
  BitSet common(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      ElementId z = join_table[x * n + y];
      bool ok = z < n;
      if (ok) {
        simd::and_to(common.words(), poset.up_sets().row(x),
                     poset.up_sets().row(y));
        ok = common.test(z) &&
             simd::is_subset(common.words(), poset.up_sets().row(z));
      }
      if (!ok) {
        throw Error(ErrorKind::join_not_lub,
                    "join(" + poset.name(x) + ", " + poset.name(y) +
                        ") is not the least upper bound",
                    {poset.name(x), poset.name(y)});
      }
    }
  }
  FiniteJoinSemilattice s;
  s.poset_ = std::move(poset);
  s.zero_ = zero;
  s.join_ = std::move(join_table);
  ElementId top = zero;
  for (ElementId x = 0; x < n; ++x) top = s.join(top, x);
  s.top_ = top;
  return s;
}

FiniteJoinSemilattice semilattice_from_joins(std::vector<std::string> names,
                                             ElementId zero,
                                             std::vector<ElementId> join_table) {
  std::size_t const n = names.size();
  if (join_table.size() != n * n) {
    throw Error(ErrorKind::parse_error, "join table is not total");
  }
  BitMatrix leq(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (join_table[x * n + y] == y) leq.set(x, y);
    }
  }
  auto poset = FinitePoset::from_relation(std::move(names), std::move(leq));
  return validate_semilattice(std::move(poset), zero, std::move(join_table));
}

FiniteJoinSemilattice semilattice_from_poset(FinitePoset poset) {
  std::size_t const n = poset.size();
  std::vector<ElementId> table(n * n);
  BitSet common(n);
  std::optional<ElementId> zero;
  for (ElementId x = 0; x < n && !zero; ++x) {
    if (simd::popcount(poset.up_sets().row(x)) == n) zero = x;
  }
  if (!zero) throw Error(ErrorKind::no_zero, "no least element");
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      simd::and_to(common.words(), poset.up_sets().row(x),
                   poset.up_sets().row(y));
      std::optional<ElementId> lub;
      for (auto z : common.members()) {
        if (simd::is_subset(common.words(), poset.up_sets().row(z))) {
          lub = z;
          break;
        }
      }
      if (!lub) {
        throw Error(ErrorKind::join_not_lub,
                    poset.name(x) + " and " + poset.name(y) +
                        " have no least upper bound",
                    {poset.name(x), poset.name(y)});
      }
      table[x * n + y] = *lub;
    }
  }
  return validate_semilattice(std::move(poset), *zero, std::move(table));
}

std::optional<DistributivityCounterexample> distributivity_counterexample(
    FiniteJoinSemilattice const& s) {
  std::size_t const n = s.size();
  auto const& down = s.poset().down_sets();
  // reach[a*n+b] = {x v y : x <= a, y <= b}
  std::vector<BitSet> reach(n * n, BitSet(n));
  for (ElementId a = 0; a < n; ++a) {
    auto below_a = BitSet(n);
    simd::or_into(below_a.words(), down.row(a));
    auto const xs = below_a.members();
    for (ElementId b = 0; b < n; ++b) {
      BitSet& r = reach[a * n + b];
      for (auto x : xs) {
        for (ElementId y = 0; y < n; ++y) {
          if (down.test(b, y)) r.set(s.join(x, y));
        }
      }
    }
  }
  for (ElementId c = 0; c < n; ++c) {
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (s.leq(c, s.join(a, b)) && !reach[a * n + b].test(c)) {
          return DistributivityCounterexample{c, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ElementId> join_irreducibles(FiniteJoinSemilattice const& s) {
  std::vector<ElementId> out;
  std::size_t const n = s.size();
  for (ElementId p = 0; p < n; ++p) {
    if (p == s.zero()) continue;
    bool irreducible = true;
    for (ElementId x = 0; x < n && irreducible; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (s.join(x, y) == p && x != p && y != p) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) out.push_back(p);
  }
  return out;
}

ElementId join_all(FiniteJoinSemilattice const& s,
                   std::span<ElementId const> xs) {
  ElementId acc = s.zero();
  for (auto x : xs) acc = s.join(acc, x);
  return acc;
}

ElementId meet(FiniteJoinSemilattice const& s, ElementId x, ElementId y) {
  auto const& down = s.poset().down_sets();
  BitSet common(s.size());
  simd::and_to(common.words(), down.row(x), down.row(y));
  auto const lower = common.members();
  ElementId m = join_all(s, lower);
  if (!s.leq(m, x) || !s.leq(m, y)) {
    throw Error(ErrorKind::internal, "meet is not a lower bound");
  }
  return m;
}

IsotoneMap IsotoneMap::make(FinitePoset source, FinitePoset target,
                            std::vector<ElementId> graph) {
  if (graph.size() != source.size()) {
    throw Error(ErrorKind::parse_error, "map is not total on its source");
  }
  for (auto g : graph) {
    if (g >= target.size()) {
      throw Error(ErrorKind::unknown_element, "map value outside target");
    }
  }
  for (ElementId x = 0; x < source.size(); ++x) {
    for (ElementId y = 0; y < source.size(); ++y) {
      if (source.leq(x, y) && !target.leq(graph[x], graph[y])) {
        throw Error(ErrorKind::not_isotone,
                    source.name(x) + " <= " + source.name(y) +
                        " but images are not ordered",
                    {source.name(x), source.name(y)});
      }
    }
  }
  IsotoneMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.graph_ = std::move(graph);
  return f;
}

JoinZeroHomomorphism JoinZeroHomomorphism::make(FiniteJoinSemilattice source,
                                                FiniteJoinSemilattice target,
                                                std::vector<ElementId> graph) {
  if (graph.size() != source.size()) {
    throw Error(ErrorKind::parse_error, "map is not total on its source");
  }
  for (auto g : graph) {
    if (g >= target.size()) {
      throw Error(ErrorKind::unknown_element, "map value outside target");
    }
  }
  if (graph[source.zero()] != target.zero()) {
    throw Error(ErrorKind::not_a_homomorphism, "zero is not preserved",
                {source.name(source.zero())});
  }
  for (ElementId x = 0; x < source.size(); ++x) {
    for (ElementId y = 0; y < source.size(); ++y) {
      if (graph[source.join(x, y)] != target.join(graph[x], graph[y])) {
        throw Error(ErrorKind::not_a_homomorphism,
                    "join of " + source.name(x) + " and " + source.name(y) +
                        " is not preserved",
                    {source.name(x), source.name(y)});
      }
    }
  }
  JoinZeroHomomorphism h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.graph_ = std::move(graph);
  return h;
}

JoinZeroHomomorphism JoinZeroHomomorphism::after(
    JoinZeroHomomorphism const& first) const {
  if (!(first.target() == source_)) {
    throw Error(ErrorKind::parse_error,
                "cannot compose: target of the first map is not the source");
  }
  std::vector<ElementId> g(first.source().size());
  for (ElementId x = 0; x < g.size(); ++x) g[x] = graph_.at(first(x));
  return make(first.source(), target_, std::move(g));
}

}  // namespace meetless
