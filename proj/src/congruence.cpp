#include "meetless/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "meetless/error.hpp"
#include "meetless/measures.hpp"

namespace meetless {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> labels) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& l : labels) {
    auto [it, fresh] =
        renumber.emplace(l, static_cast<std::uint32_t>(renumber.size()));
    l = it->second;
  }
  return labels;
}

// Order of Conc members: identity first, then coarser later.
bool conc_order(Congruence const& x, Congruence const& y) {
  if (x.block_count() != y.block_count()) {
    return x.block_count() > y.block_count();
  }
  return x.labels() < y.labels();
}

}  // namespace

FiniteLattice FiniteLattice::from_semilattice(FiniteJoinSemilattice s) {
  std::size_t const n = s.size();
  std::vector<ElementId> m(n * n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) m[x * n + y] = meetless::meet(s, x, y);
  }
  FiniteLattice l;
  l.s_ = std::move(s);
  l.meet_ = std::move(m);
  return l;
}

FiniteLattice FiniteLattice::with_meets(FiniteJoinSemilattice s,
                                        std::vector<ElementId> meet_table) {
  std::size_t const n = s.size();
  if (meet_table.size() != n * n) {
    throw Error(ErrorKind::parse_error, "meet table is not total");
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      ElementId const z = meet_table[x * n + y];
      if (z >= n || z != meetless::meet(s, x, y)) {
        throw Error(ErrorKind::meet_not_glb,
                    "meet(" + s.name(x) + ", " + s.name(y) +
                        ") is not the greatest lower bound",
                    {s.name(x), s.name(y)});
      }
    }
  }
  FiniteLattice l;
  l.s_ = std::move(s);
  l.meet_ = std::move(meet_table);
  return l;
}

Congruence::Congruence(std::vector<std::uint32_t> labels)
    : labels_(normalized(std::move(labels))) {}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::uint32_t> l(n);
  std::iota(l.begin(), l.end(), 0u);
  return Congruence(std::move(l));
}

Congruence Congruence::full(std::size_t n) {
  return Congruence(std::vector<std::uint32_t>(n, 0));
}

std::size_t Congruence::block_count() const noexcept {
  if (labels_.empty()) return 0;
  return *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<std::vector<ElementId>> Congruence::blocks() const {
  std::vector<std::vector<ElementId>> out(block_count());
  for (ElementId x = 0; x < labels_.size(); ++x) out[labels_[x]].push_back(x);
  return out;  // labels follow first occurrence, so already sorted
}

bool Congruence::refines(Congruence const& other) const {
  std::vector<std::int64_t> image(block_count(), -1);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    auto& slot = image[labels_[x]];
    if (slot < 0) {
      slot = other.labels_[x];
    } else if (slot != other.labels_[x]) {
      return false;
    }
  }
  return true;
}

bool is_congruence(FiniteLattice const& l, Congruence const& theta) {
  std::size_t const n = l.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId x2 = x + 1; x2 < n; ++x2) {
      if (!theta.same(x, x2)) continue;
      for (ElementId z = 0; z < n; ++z) {
        if (!theta.same(l.join(x, z), l.join(x2, z)) ||
            !theta.same(l.meet(x, z), l.meet(x2, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence principal_congruence(FiniteLattice const& l, ElementId x,
                                ElementId y) {
  std::size_t const n = l.size();
  if (x >= n || y >= n) {
    throw Error(ErrorKind::unknown_element, "element outside the lattice");
  }
  UnionFind uf(n);
  bool changed = uf.unite(x, y);
  // Compatibility with the unary translations p -> p v z and p -> p ^ z,
  // plus transitivity from union-find, generates the congruence.
  while (changed) {
    changed = false;
    for (ElementId p = 0; p < n; ++p) {
      for (ElementId q = p + 1; q < n; ++q) {
        if (uf.find(p) != uf.find(q)) continue;
        for (ElementId z = 0; z < n; ++z) {
          changed |= uf.unite(l.join(p, z), l.join(q, z));
          changed |= uf.unite(l.meet(p, z), l.meet(q, z));
        }
      }
    }
  }
  return Congruence(uf.labels());
}

Congruence congruence_join(Congruence const& a, Congruence const& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::parse_error, "congruences of different lattices");
  }
  std::size_t const n = a.size();
  UnionFind uf(n);
  std::vector<std::int64_t> first_a(n, -1), first_b(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    auto& fa = first_a[a.labels()[x]];
    if (fa < 0) fa = x; else uf.unite(static_cast<std::uint32_t>(fa), x);
    auto& fb = first_b[b.labels()[x]];
    if (fb < 0) fb = x; else uf.unite(static_cast<std::uint32_t>(fb), x);
  }
  return Congruence(uf.labels());
}

ElementId ConcSemilattice::id_of(Congruence const& theta) const {
  auto it = std::lower_bound(members.begin(), members.end(), theta, conc_order);
  if (it == members.end() || *it != theta) {
    throw Error(ErrorKind::unknown_element, "not a congruence of this lattice");
  }
  return static_cast<ElementId>(it - members.begin());
}

std::string congruence_name(FiniteLattice const& l, Congruence const& theta) {
  std::string s = "[";
  auto const bs = theta.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < bs[i].size(); ++j) {
      if (j) s += ",";
      s += l.name(bs[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

ConcSemilattice all_congruences(FiniteLattice const& l) {
  std::size_t const n = l.size();
  std::set<Congruence> found{Congruence::identity(n)};
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      found.insert(principal_congruence(l, x, y));
    }
  }
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    std::vector<Congruence> const snapshot(found.begin(), found.end());
    for (auto const& f : frontier) {
      for (auto const& g : snapshot) {
        auto j = congruence_join(f, g);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  ConcSemilattice conc;
  conc.members.assign(found.begin(), found.end());
  std::sort(conc.members.begin(), conc.members.end(), conc_order);
  std::size_t const m = conc.members.size();
  std::vector<std::string> names;
  for (auto const& t : conc.members) names.push_back(congruence_name(l, t));
  std::vector<ElementId> table(m * m);
  for (ElementId i = 0; i < m; ++i) {
    for (ElementId j = 0; j < m; ++j) {
      table[i * m + j] =
          conc.id_of(congruence_join(conc.members[i], conc.members[j]));
    }
  }
  conc.semilattice = semilattice_from_joins(std::move(names), 0, std::move(table));
  // The order derived from joins must be refinement.
  for (ElementId i = 0; i < m; ++i) {
    for (ElementId j = 0; j < m; ++j) {
      if (conc.semilattice.leq(i, j) !=
          conc.members[i].refines(conc.members[j])) {
        throw Error(ErrorKind::internal, "Conc order is not refinement");
      }
    }
  }
  return conc;
}

std::vector<Congruence> congruences_by_partition_filter(
    FiniteLattice const& l, std::size_t max_elements) {
  std::size_t const n = l.size();
  if (n > max_elements) {
    throw Error(ErrorKind::too_large,
                "partition filter limited to " + std::to_string(max_elements) +
                    " elements");
  }
  std::vector<Congruence> out;
  if (n == 0) return out;
  // Restricted growth strings: labels[0] = 0, labels[i] <= 1 + max before i.
  std::vector<std::uint32_t> rgs(n, 0), maxes(n, 0);
  for (;;) {
    Congruence theta(rgs);
    if (is_congruence(l, theta)) out.push_back(std::move(theta));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ThetaPlus theta_plus(FiniteLattice const& l) {
  auto conc = std::make_shared<ConcSemilattice const>(all_congruences(l));
  std::size_t const n = l.size();
  ThetaPlus t{conc, std::vector<ElementId>(n * n)};
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      t.table[x * n + y] =
          conc->id_of(principal_congruence(l, y, l.join(x, y)));
    }
  }
  return t;
}

PosetMeasure theta_plus_measure(FiniteLattice const& l) {
  auto const t = theta_plus(l);
  PosetMeasure m;
  m.poset = l.semilattice().poset();
  m.ext = std::make_shared<FreeExtension const>(
      std::make_shared<TableBase>(t.conc->semilattice));
  m.mu.reserve(t.table.size());
  for (auto id : t.table) m.mu.push_back(FreeElement::base(id));
  return m;
}

}  // namespace meetless
