#include "meetless/refinement.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "meetless/error.hpp"

namespace meetless {
namespace {

RefinementWitness checked(RefinementProblem const& p, RefinementWitness w) {
  if (!is_valid_witness(p, w)) {
    throw Error(ErrorKind::internal, "refinement produced an invalid witness");
  }
  return w;
}

std::vector<ElementId> below(FiniteJoinSemilattice const& s, ElementId x) {
  return s.poset().down_sets().row_members(x);
}

// Least (x, y) by ids with x <= abound, y <= bbound and x v y = c.
std::optional<std::pair<ElementId, ElementId>> least_split(
    FiniteJoinSemilattice const& s, ElementId c, ElementId abound,
    ElementId bbound) {
  auto const xs = below(s, abound);
  auto const ys = below(s, bbound);
  for (auto x : xs) {
    for (auto y : ys) {
      if (s.join(x, y) == c) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

void RefinementProblem::validate() const {
  std::size_t const n = s.size();
  if (a >= n || b >= n) {
    throw Error(ErrorKind::unknown_element, "a or b outside the semilattice");
  }
  ElementId const ab = s.join(a, b);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= n) {
      throw Error(ErrorKind::unknown_element, "chain entry outside the semilattice");
    }
    if (i > 0 && !s.leq(chain[i - 1], chain[i])) {
      throw Error(ErrorKind::not_isotone,
                  "chain decreases at position " + std::to_string(i),
                  {s.name(chain[i - 1]), s.name(chain[i])});
    }
    if (!s.leq(chain[i], ab)) {
      throw Error(ErrorKind::hypothesis_violated,
                  s.name(chain[i]) + " is not below a v b", {s.name(chain[i])});
    }
  }
}

bool is_valid_witness(RefinementProblem const& p, RefinementWitness const& w) {
  auto const& s = p.s;
  std::size_t const m = p.chain.size();
  if (w.as.size() != m || w.bs.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (w.as[i] >= s.size() || w.bs[i] >= s.size()) return false;
    if (!s.leq(w.as[i], p.a) || !s.leq(w.bs[i], p.b)) return false;
    if (s.join(w.as[i], w.bs[i]) != p.chain[i]) return false;
    if (i > 0 && (!s.leq(w.as[i - 1], w.as[i]) ||
                  !s.leq(w.bs[i - 1], w.bs[i]))) {
      return false;
    }
  }
  return true;
}

RefinementWitness refine_lattice(RefinementProblem const& p) {
  p.validate();
  RefinementWitness w;
  for (auto c : p.chain) {
    w.as.push_back(meet(p.s, p.a, c));
    w.bs.push_back(meet(p.s, p.b, c));
    if (p.s.join(w.as.back(), w.bs.back()) != c) {
      // (a ^ c) v (b ^ c) = c is exactly distributivity at this c.
      throw Error(ErrorKind::not_distributive,
                  "(a ^ c) v (b ^ c) != c for c = " + p.s.name(c),
                  {p.s.name(c), p.s.name(p.a), p.s.name(p.b)});
    }
  }
  return checked(p, std::move(w));
}

JoinIrredCover join_irreducible_cover(RefinementProblem const& p) {
  p.validate();
  auto const& s = p.s;
  if (auto cx = distributivity_counterexample(s)) {
    throw Error(ErrorKind::not_distributive,
                s.name(cx->c) + " <= " + s.name(cx->a) + " v " +
                    s.name(cx->b) + " has no split",
                {s.name(cx->c), s.name(cx->a), s.name(cx->b)});
  }
  auto const ji = join_irreducibles(s);
  std::size_t const m = p.chain.size();
  std::vector<std::vector<ElementId>> C(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto q : ji) {
      if (!s.leq(q, p.chain[i])) continue;
      bool maximal = std::none_of(ji.begin(), ji.end(), [&](ElementId r) {
        return r != q && s.leq(q, r) && s.leq(r, p.chain[i]);
      });
      if (maximal) C[i].push_back(q);
    }
  }
  JoinIrredCover cover{std::vector<std::vector<ElementId>>(m),
                       std::vector<std::vector<ElementId>>(m)};
  auto pick = [&](std::size_t i, auto&& keep) {
    std::vector<ElementId> out;
    for (auto q : C[i]) {
      if (keep(q)) out.push_back(q);
    }
    return out;
  };
  for (std::size_t k = m; k-- > 0;) {
    if (k + 1 == m) {
      cover.A[k] = pick(k, [&](ElementId q) { return s.leq(q, p.a); });
      cover.B[k] = pick(k, [&](ElementId q) { return s.leq(q, p.b); });
    } else {
      auto under = [&s](std::vector<ElementId> const& tops) {
        return [&s, &tops](ElementId q) {
          return std::any_of(tops.begin(), tops.end(),
                             [&](ElementId r) { return s.leq(q, r); });
        };
      };
      cover.A[k] = pick(k, under(cover.A[k + 1]));
      cover.B[k] = pick(k, under(cover.B[k + 1]));
    }
    std::vector<ElementId> both;
    std::set_union(cover.A[k].begin(), cover.A[k].end(), cover.B[k].begin(),
                   cover.B[k].end(), std::back_inserter(both));
    if (both != C[k]) {
      throw Error(ErrorKind::internal,
                  "join-irreducible cover misses part of C_i at position " +
                      std::to_string(k));
    }
  }
  return cover;
}

RefinementWitness refine_strongly_distributive(RefinementProblem const& p) {
  auto const cover = join_irreducible_cover(p);
  RefinementWitness w;
  for (std::size_t i = 0; i < p.chain.size(); ++i) {
    w.as.push_back(join_all(p.s, cover.A[i]));
    w.bs.push_back(join_all(p.s, cover.B[i]));
  }
  return checked(p, std::move(w));
}

RefinementWitness refine_sequential(RefinementProblem const& p,
                                    std::vector<std::size_t> order) {
  p.validate();
  auto const& s = p.s;
  std::size_t const m = p.chain.size();
  if (order.empty()) {
    for (std::size_t i = 0; i < m; ++i) order.push_back(i);
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != m || sorted[i] != i) {
        throw Error(ErrorKind::parse_error,
                    "insertion order is not a permutation of the positions");
      }
    }
  }
  RefinementWitness w{std::vector<ElementId>(m), std::vector<ElementId>(m)};
  std::set<std::size_t> placed;
  for (auto k : order) {
    auto hi = placed.upper_bound(k);
    std::optional<std::size_t> i, j;
    if (hi != placed.end()) j = *hi;
    if (hi != placed.begin()) i = *std::prev(hi);
    // Split c_k under the right neighbour's pair, or under (a, b) at the top.
    ElementId const abound = j ? w.as[*j] : p.a;
    ElementId const bbound = j ? w.bs[*j] : p.b;
    auto split = least_split(s, p.chain[k], abound, bbound);
    if (!split) {
      throw Error(ErrorKind::distributivity_split_failed,
                  s.name(p.chain[k]) + " <= " + s.name(abound) + " v " +
                      s.name(bbound) + " has no split",
                  {s.name(p.chain[k]), s.name(abound), s.name(bbound)});
    }
    w.as[k] = i ? s.join(w.as[*i], split->first) : split->first;
    w.bs[k] = i ? s.join(w.bs[*i], split->second) : split->second;
    placed.insert(k);
  }
  return checked(p, std::move(w));
}

std::optional<RefinementWitness> refine_bruteforce(RefinementProblem const& p,
                                                   std::size_t guard) {
  p.validate();
  auto const& s = p.s;
  auto const da = below(s, p.a);
  auto const db = below(s, p.b);
  if (da.size() * db.size() > guard) {
    throw Error(ErrorKind::too_large,
                "search space " + std::to_string(da.size() * db.size()) +
                    " per index exceeds the guard " + std::to_string(guard));
  }
  std::size_t const m = p.chain.size();
  RefinementWitness w{std::vector<ElementId>(m), std::vector<ElementId>(m)};
  std::set<std::tuple<std::size_t, ElementId, ElementId>> dead;
  auto search = [&](auto&& self, std::size_t i, ElementId pa,
                    ElementId pb) -> bool {
    if (i == m) return true;
    if (dead.count({i, pa, pb})) return false;
    for (auto x : da) {
      if (!s.leq(pa, x)) continue;
      for (auto y : db) {
        if (!s.leq(pb, y) || s.join(x, y) != p.chain[i]) continue;
        w.as[i] = x;
        w.bs[i] = y;
        if (self(self, i + 1, x, y)) return true;
      }
    }
    dead.insert({i, pa, pb});
    return false;
  };
  if (!search(search, 0, s.zero(), s.zero())) return std::nullopt;
  return checked(p, std::move(w));
}

PatternReport check_pattern(SequencePattern const& sp) {
  if (sp.x.empty()) throw Error(ErrorKind::parse_error, "pattern has no rows");
  std::size_t const k = sp.indices.size();
  if (sp.c.size() != k) throw Error(ErrorKind::parse_error, "c row size");
  for (auto const& row : sp.x) {
    if (row.size() != k) {
      throw Error(ErrorKind::parse_error, "pattern rows are not total");
    }
  }
  auto const& ext = *sp.ext;
  std::size_t const n = sp.x.size() - 1;
  PatternReport r;
  auto note = [k](ConditionReport& c) { c.per_index.assign(k, true); };
  note(r.cond1);
  note(r.cond2);
  note(r.cond3);
  auto fail = [](ConditionReport& c, std::size_t row, std::size_t pos) {
    c.per_index[pos] = false;
    if (c.holds) c.first_violation = std::pair{row, pos};
    c.holds = false;
  };
  for (std::size_t q = 0; q < k; ++q) {
    if (!ext.is_zero(sp.x[0][q]) || !(sp.x[n][q] == sp.c[q])) {
      fail(r.cond1, 0, q);
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (!ext.leq(sp.x[i][q], sp.c[q])) {
        fail(r.cond2, i, q);
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& prev = sp.x[i][q];
      auto const& next = sp.x[i + 1][q];
      if (!ext.leq(next, ext.join(sp.a, prev)) &&
          !ext.leq(next, ext.join(sp.b, prev))) {
        fail(r.cond3, i, q);
        break;
      }
    }
  }
  for (auto const& row : sp.x) {
    bool iso = true;
    for (std::size_t q = 1; q < k; ++q) iso = iso && ext.leq(row[q - 1], row[q]);
    r.rows_isotone.push_back(iso);
    std::size_t from = k == 0 ? 0 : k - 1;
    while (from > 0 && row[from - 1] == row[k - 1]) --from;
    r.constant_from.push_back(from);
  }
  return r;
}

}  // namespace meetless
