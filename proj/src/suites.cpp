#include "meetless/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "meetless/chain.hpp"
#include "meetless/congruence.hpp"
#include "meetless/corpus.hpp"
#include "meetless/error.hpp"
#include "meetless/measures.hpp"
#include "meetless/refinement.hpp"
#include "meetless/sampling.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

struct SuiteFailure {
  std::string what;
};

class Tally {
 public:
  template <class Describe>
  void require(bool ok, Describe&& describe) {
    ++checks_;
    if (!ok) throw SuiteFailure{describe()};
  }
  std::size_t checks() const noexcept { return checks_; }

 private:
  std::size_t checks_ = 0;
};

std::vector<ChainIndex> prefix(ChainIndex k) {
  std::vector<ChainIndex> out;
  for (ChainIndex i = 0; i < k; ++i) out.push_back(i);
  return out;
}

std::vector<Code> codes_of(std::span<ChainIndex const> xs) {
  return s_lambda_codes(xs);
}

bool is_subset(std::span<ChainIndex const> a, std::span<ChainIndex const> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ChainIndex> set_and(std::span<ChainIndex const> a,
                                std::span<ChainIndex const> b) {
  std::vector<ChainIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<ChainIndex> set_or(std::span<ChainIndex const> a,
                               std::span<ChainIndex const> b) {
  std::vector<ChainIndex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::string show(std::span<ChainIndex const> xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? "," : "") + std::to_string(xs[i]);
  }
  return s + "}";
}

// All subsets of `universe` containing `base`.
std::vector<std::vector<ChainIndex>> supersets_within(
    std::span<ChainIndex const> base, std::span<ChainIndex const> universe) {
  std::vector<ChainIndex> free;
  std::set_difference(universe.begin(), universe.end(), base.begin(),
                      base.end(), std::back_inserter(free));
  std::vector<std::vector<ChainIndex>> out;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<ChainIndex> s(base.begin(), base.end());
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((mask >> i) & 1u) s.push_back(free[i]);
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

// x <= y read off the defining formula for elements of rank <= 1: every
// triple of x (diagonal included) missing from y has u or w below π(y).
bool leq_by_definition(Base const& base, FreeElement const& x,
                       FreeElement const& y) {
  auto full = [](FreeElement const& e) {
    std::vector<std::array<Code, 3>> ts;
    if (e.is_base()) {
      ts.push_back({e.code(), e.code(), e.code()});
      return ts;
    }
    Code const p = e.diagonal().code();
    ts.push_back({p, p, p});
    for (auto const& t : e.triples()) {
      ts.push_back({t.u.code(), t.v.code(), t.w.code()});
    }
    return ts;
  };
  auto const tx = full(x);
  auto const ty = full(y);
  Code const py = ty.front()[0];
  for (auto const& t : tx) {
    if (std::find(ty.begin(), ty.end(), t) != ty.end()) continue;
    if (!base.leq(t[0], py) && !base.leq(t[2], py)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 1. Semilattice laws

std::string semilattice_laws() {
  Tally t;
  auto corpus = lattices_up_to(7);
  std::size_t const generated = corpus.size();
  for (ChainIndex k = 0; k <= 3; ++k) {
    auto const xs = prefix(k);
    corpus.push_back(s_lambda(xs));
  }
  std::vector<ChainIndex> const spread{2, 5, 9};
  corpus.push_back(s_lambda(spread));
  for (auto const& s : corpus) {
    std::size_t const n = s.size();
    auto where = [&](ElementId x, ElementId y) {
      return " in a " + std::to_string(n) + "-element semilattice at (" +
             s.name(x) + ", " + s.name(y) + ")";
    };
    for (ElementId x = 0; x < n; ++x) {
      t.require(s.join(x, x) == x, [&] { return "idempotence" + where(x, x); });
      t.require(s.join(x, s.zero()) == x, [&] { return "zero" + where(x, x); });
      for (ElementId y = 0; y < n; ++y) {
        ElementId const j = s.join(x, y);
        t.require(j == s.join(y, x), [&] { return "commutativity" + where(x, y); });
        bool lub = s.leq(x, j) && s.leq(y, j);
        for (ElementId z = 0; z < n && lub; ++z) {
          if (s.leq(x, z) && s.leq(y, z)) lub = s.leq(j, z);
        }
        t.require(lub, [&] { return "least upper bound" + where(x, y); });
        for (ElementId z = 0; z < n; ++z) {
          t.require(s.join(x, s.join(y, z)) == s.join(j, z),
                    [&] { return "associativity" + where(x, y); });
        }
      }
    }
  }
  return std::to_string(generated) + " generated semilattices (<= 7 elements) + " +
         std::to_string(corpus.size() - generated) + " S(Λ) tables, " +
         std::to_string(t.checks()) + " law instances";
}

// ---------------------------------------------------------------------------
// 2. R(S(∅)) is a <join,0>-semilattice

struct RS0 {
  std::shared_ptr<TableBase> base;
  std::shared_ptr<FreeExtension> ext;
  std::vector<FreeElement> all;
};

RS0 make_rs0() {
  std::vector<ChainIndex> const none;
  RS0 r;
  r.base = std::make_shared<TableBase>(s_lambda(none));
  r.ext = std::make_shared<FreeExtension>(r.base);
  std::vector<Code> const carrier{0, 1, 2, 3};
  r.all = enumerate_R(*r.ext, carrier);
  return r;
}

std::string free_structure() {
  Tally t;
  auto const r = make_rs0();
  auto const& ext = *r.ext;
  std::size_t const n = r.all.size();
  std::vector<Code> const carrier{0, 1, 2, 3};
  t.require(n == kRS0Count && count_R(*r.base, carrier) == kRS0Count, [&] {
    return "|R(S(∅))| = " + std::to_string(n) + ", expected " +
           std::to_string(kRS0Count);
  });
  std::unordered_map<FreeElement, ElementId, FreeElementHash> index;
  for (ElementId i = 0; i < n; ++i) {
    t.require(ext.is_reduced(r.all[i]),
              [&] { return "not reduced: " + std::to_string(i); });
    t.require(index.emplace(r.all[i], i).second,
              [&] { return "duplicate element " + std::to_string(i); });
  }
  BitMatrix up(n);
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      if (ext.leq(r.all[i], r.all[j])) up.set(i, j);
    }
  }
  for (ElementId i = 0; i < n; ++i) {
    t.require(up.test(i, i), [&] { return "not reflexive at " + std::to_string(i); });
  }
  std::size_t a = 0, b = 0;
  t.require(!up.find_symmetric_pair(a, b), [&] {
    return "not antisymmetric at " + std::to_string(a) + ", " + std::to_string(b);
  });
  t.require(!up.find_transitivity_gap(a, b), [&] {
    return "not transitive at " + std::to_string(a) + ", " + std::to_string(b);
  });
  // Relabel by decreasing up-set size: then the least member of an up-closed
  // set, when it exists, is its first member.
  std::vector<std::size_t> count(n);
  for (ElementId i = 0; i < n; ++i) count[i] = simd::popcount(up.row(i));
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId x, ElementId y) { return count[x] > count[y]; });
  std::vector<ElementId> pos(n);
  for (ElementId k = 0; k < n; ++k) pos[order[k]] = k;
  BitMatrix sorted(n);
  for (ElementId k = 0; k < n; ++k) {
    for (auto j : up.row_members(order[k])) sorted.set(k, pos[j]);
  }
  std::vector<std::size_t> sorted_count(n);
  for (ElementId k = 0; k < n; ++k) sorted_count[k] = count[order[k]];
  BitSet common(n);
  std::size_t const stride = sorted.stride();
  Rng rng(20240611);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      simd::and_to(common.words(), sorted.row(x), sorted.row(y));
      std::size_t const size = simd::popcount(common.words());
      std::size_t first = n;
      auto const w = common.words();
      for (std::size_t k = 0; k < stride; ++k) {
        if (w[k]) {
          first = k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
          break;
        }
      }
      t.require(first < n && sorted_count[first] == size, [&] {
        return "no least upper bound for " + print_term(r.all[order[x]]) +
               " and " + print_term(r.all[order[y]]);
      });
    }
  }
  // join_free agrees with the least upper bound on a sample of pairs.
  std::size_t const sampled = 20000;
  for (std::size_t s = 0; s < sampled; ++s) {
    ElementId const x = pick(rng), y = pick(rng);
    auto const j = ext.join(r.all[x], r.all[y]);
    auto it = index.find(j);
    t.require(it != index.end(), [&] { return "join left the enumeration"; });
    ElementId const k = pos[it->second];
    simd::and_to(common.words(), sorted.row(pos[x]), sorted.row(pos[y]));
    t.require(common.test(k) &&
                  sorted_count[k] == simd::popcount(common.words()),
              [&] { return "join_free is not the least upper bound"; });
  }
  // Base embedding.
  auto const& s0 = r.base->semilattice();
  for (ElementId x = 0; x < 4; ++x) {
    t.require(index.count(FreeElement::base(x)) == 1,
              [&] { return "base element missing"; });
    for (ElementId y = 0; y < 4; ++y) {
      auto const fx = FreeElement::base(x), fy = FreeElement::base(y);
      t.require(ext.leq(fx, fy) == s0.leq(x, y) &&
                    ext.join(fx, fy) == FreeElement::base(s0.join(x, y)),
                [&] { return "base embedding fails at " + s0.name(x) + ", " + s0.name(y); });
    }
  }
  return std::to_string(n) + " elements (fixture " + std::to_string(kRS0Count) +
         "), partial order and least upper bounds on all " +
         std::to_string(n * (n - 1) / 2) + " pairs, " + std::to_string(sampled) +
         " sampled joins, base embedding";
}

// ---------------------------------------------------------------------------
// 3. Join normalisation against brute force

std::string join_oracle() {
  Tally t;
  auto const r = make_rs0();
  auto const& ext = *r.ext;
  auto const& all = r.all;
  Rng rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::size_t const pairs = 1000;
  for (std::size_t s = 0; s < pairs; ++s) {
    auto const& x = all[pick(rng)];
    auto const& y = all[pick(rng)];
    std::vector<std::size_t> ub;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (leq_by_definition(*r.base, x, all[k]) &&
          leq_by_definition(*r.base, y, all[k])) {
        ub.push_back(k);
      }
    }
    std::size_t least = ub.front();
    for (auto k : ub) {
      if (leq_by_definition(*r.base, all[k], all[least])) least = k;
    }
    bool is_least = std::all_of(ub.begin(), ub.end(), [&](std::size_t k) {
      return leq_by_definition(*r.base, all[least], all[k]);
    });
    t.require(is_least, [&] {
      return "no least upper bound for " + print_term(x) + ", " + print_term(y);
    });
    t.require(ext.join(x, y) == all[least], [&] {
      return "join(" + print_term(x) + ", " + print_term(y) + ") differs from " +
             print_term(all[least]);
    });
  }
  // A family in R(S({0})) checked against a candidate pool.
  auto const& cext = chain_extension();
  std::vector<ChainIndex> const zero_only{0};
  auto const atoms = codes_of(zero_only);
  std::vector<FreeElement> family;
  std::set<FreeElement> seen;
  SampleShape const shape{64, 1};
  while (family.size() < 200) {
    auto x = random_element(rng, cext, atoms, shape);
    if (seen.insert(x).second) family.push_back(std::move(x));
  }
  std::vector<FreeElement> pool = family;
  for (auto c : atoms) pool.push_back(cext.element(c));
  for (auto& g : base_bowties(cext, atoms)) pool.push_back(std::move(g));
  std::size_t family_pairs = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t k = i; k < family.size(); ++k) {
      auto const& x = family[i];
      auto const& y = family[k];
      auto const j = cext.join(x, y);
      ++family_pairs;
      t.require(cext.is_reduced(j) && cext.leq(x, j) && cext.leq(y, j),
                [&] { return "join is not an upper bound"; });
      t.require(cext.join(y, x) == j, [&] { return "join not commutative"; });
      for (auto const& z : pool) {
        if (cext.leq(x, z) && cext.leq(y, z)) {
          t.require(cext.leq(j, z), [&] {
            return "join(" + print_term(x) + ", " + print_term(y) +
                   ") is not below the upper bound " + print_term(z);
          });
        }
      }
    }
  }
  return std::to_string(pairs) + " random pairs of R(S(∅)) against brute force, " +
         std::to_string(family_pairs) + " pairs of a 200-element R(S({0})) family " +
         "against a " + std::to_string(pool.size()) + "-element pool";
}

// ---------------------------------------------------------------------------
// 4. x <= y iff x <= π(y) for x in S

std::string projection() {
  Tally t;
  auto const r = make_rs0();
  auto const& ext = *r.ext;
  for (Code s = 0; s < 4; ++s) {
    auto const x = FreeElement::base(s);
    for (auto const& y : r.all) {
      bool const direct = ext.leq(x, y);
      t.require(direct == r.base->leq(s, pi(y).code()) &&
                    direct == leq_by_definition(*r.base, x, y),
                [&] {
                  return r.base->name(s) + " vs " + print_term(y) +
                         ": order and projection disagree";
                });
    }
  }
  return std::to_string(t.checks()) + " pairs of S(∅) x R(S(∅))";
}

// ---------------------------------------------------------------------------
// 5. bowtie identities

std::string bowtie_identities() {
  Tally t;
  auto const& ext = chain_extension();
  std::size_t triples = 0;
  for (ChainIndex k : {ChainIndex{0}, ChainIndex{1}}) {
    auto const xs = prefix(k);
    auto const carrier = codes_of(xs);
    for (auto u : carrier) {
      for (auto v : carrier) {
        for (auto w : carrier) {
          auto const eu = ext.element(u), ev = ext.element(v), ew = ext.element(w);
          if (!ext.leq(ew, ext.join(eu, ev))) continue;
          ++triples;
          auto const g = ext.bowtie(eu, ev, ew);
          auto const h = ext.bowtie(ev, eu, ew);
          auto where = [&] {
            return " at <" + print_term(eu) + "," + print_term(ev) + "," +
                   print_term(ew) + ">";
          };
          t.require(ext.leq(g, eu), [&] { return "bowtie not below u" + where(); });
          t.require(ext.join(g, h) == ew,
                    [&] { return "bowtie(u,v,w) v bowtie(v,u,w) != w" + where(); });
          t.require(g.rank() <= 1, [&] { return "rank above 1" + where(); });
        }
      }
    }
  }
  return std::to_string(triples) + " triples of C(S(∅)) and C(S({0}))";
}

// ---------------------------------------------------------------------------
// 6. Functor laws

IndexMap random_isotone(Rng& rng, std::vector<ChainIndex> const& src,
                        std::vector<ChainIndex> const& tgt) {
  std::uniform_int_distribution<std::size_t> d(0, tgt.size() - 1);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < src.size(); ++i) picks.push_back(d(rng));
  std::sort(picks.begin(), picks.end());
  std::vector<ChainIndex> image;
  for (auto p : picks) image.push_back(tgt[p]);
  return IndexMap::make(src, tgt, std::move(image));
}

std::vector<ChainIndex> nonempty_index_set(Rng& rng) {
  for (;;) {
    auto s = random_index_set(rng, 8, 0.4);
    if (!s.empty()) return s;
  }
}

std::string functor_laws() {
  Tally t;
  auto const& ext = chain_extension();
  Rng rng(11);
  std::size_t const maps = 100, elements = 100;
  for (std::size_t m = 0; m < maps; ++m) {
    auto const X = nonempty_index_set(rng);
    auto const Y = nonempty_index_set(rng);
    auto const Z = nonempty_index_set(rng);
    auto const f = random_isotone(rng, X, Y);
    auto const g = random_isotone(rng, Y, Z);
    std::vector<ChainIndex> gf_image;
    for (auto i : X) gf_image.push_back(g(f(i)));
    auto const gf = IndexMap::make(X, Z, gf_image);
    // The table homomorphisms compose the same way.
    auto const sf = s_map(f), sg = s_map(g), sgf = s_map(gf);
    t.require(sg.after(sf).graph() == sgf.graph(),
              [&] { return "S(g) S(f) != S(gf) on " + show(X); });
    auto lf = [&](FreeElement const& x) {
      return lift_hom(ext, [&](Code c) { return f.on_code(c); }, x);
    };
    auto lg = [&](FreeElement const& x) {
      return lift_hom(ext, [&](Code c) { return g.on_code(c); }, x);
    };
    auto lgf = [&](FreeElement const& x) {
      return lift_hom(ext, [&](Code c) { return gf.on_code(c); }, x);
    };
    auto lid = [&](FreeElement const& x) {
      return lift_hom(ext, [](Code c) { return c; }, x);
    };
    auto const atoms = codes_of(X);
    t.require(lf(ext.zero()) == ext.zero(), [&] { return "zero not preserved"; });
    FreeElement prev = ext.zero();
    for (std::size_t e = 0; e < elements; ++e) {
      auto const x = random_element(rng, ext, atoms);
      auto const fx = lf(x);
      t.require(lid(x) == x, [&] { return "F(id) moves " + print_term(x); });
      t.require(lgf(x) == lg(fx), [&] {
        return "F(gf) != F(g)F(f) at " + print_term(x) + " on " + show(X);
      });
      t.require(ext.is_reduced(fx), [&] { return "image not reduced"; });
      t.require(lf(ext.join(x, prev)) == ext.join(fx, lf(prev)),
                [&] { return "join not preserved at " + print_term(x); });
      if (ext.leq(prev, x)) {
        t.require(ext.leq(lf(prev), fx), [&] { return "not isotone"; });
      }
      prev = x;
    }
  }
  return std::to_string(maps) + " homomorphism pairs, " +
         std::to_string(maps * elements) + " sampled elements, " +
         std::to_string(t.checks()) + " law instances";
}

// ---------------------------------------------------------------------------
// 7. Interpolation

class SmallF1 {
 public:
  // F_1(∅): every element of rank <= 1 over S(∅).
  SmallF1() {
    std::vector<Code> const carrier{chain::zero(), chain::a(), chain::b(),
                                    chain::ab()};
    all_ = enumerate_R(chain_extension(), carrier);
  }
  std::size_t size() const { return all_.size(); }

  BitSet const& up(FreeElement const& x) { return cached(x, up_, true); }
  BitSet const& down(FreeElement const& y) { return cached(y, down_, false); }

 private:
  using Cache = std::unordered_map<FreeElement, BitSet, FreeElementHash>;
  BitSet const& cached(FreeElement const& e, Cache& cache, bool upward) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto const& ext = chain_extension();
    BitSet bits(all_.size());
    for (std::size_t k = 0; k < all_.size(); ++k) {
      if (upward ? ext.leq(e, all_[k]) : ext.leq(all_[k], e)) bits.set(k);
    }
    return cache.emplace(e, std::move(bits)).first->second;
  }
  std::vector<FreeElement> all_;
  Cache up_, down_;
};

std::string interpolation() {
  Tally t;
  auto const& ext = chain_extension();
  SmallF1 f1;
  Rng rng(3);
  std::size_t calls = 0, certificates = 0, brute_checked = 0, pairs = 0;
  auto run = [&](FreeElement const& x, FreeElement const& y,
                 std::vector<ChainIndex> const& L, bool all_splits) {
    auto const sx = support(x), sy = support(y);
    std::vector<std::vector<ChainIndex>> Xs, Ys;
    if (all_splits) {
      Xs = supersets_within(sx, L);
      Ys = supersets_within(sy, L);
    } else {
      Xs = {sx, L};
      Ys = {sy, L};
    }
    ++pairs;
    for (auto const& X : Xs) {
      for (auto const& Y : Ys) {
        ++calls;
        Interpolation r;
        try {
          r = interpolate(x, X, y, Y);
        } catch (Error const& e) {
          throw SuiteFailure{"interpolate(" + print_term(x) + ", " + show(X) +
                             ", " + print_term(y) + ", " + show(Y) +
                             "): " + e.what()};
        }
        if (!r.is_interpolant()) ++certificates;
        auto const common = set_and(X, Y);
        if (!common.empty() || std::max(x.rank(), y.rank()) > 1) continue;
        ++brute_checked;
        BitSet both = f1.up(x);
        both &= f1.down(y);
        bool const exists = both.any();
        if (r.is_interpolant()) {
          t.require(exists || r.z.rank() > 1, [&] {
            return "brute force finds no interpolant for " + print_term(x) +
                   " <= " + print_term(y);
          });
        }
        bool const certified =
            !is_subset(Y, X) &&
            ext.leq(ext.element(chain::c(r.is_interpolant() ? 0 : r.xi)), y);
        t.require(exists || (!r.is_interpolant() && certified), [&] {
          return "neither branch holds for " + print_term(x) + " <= " +
                 print_term(y) + " with X=" + show(X) + ", Y=" + show(Y);
        });
      }
    }
  };
  std::size_t corpus_total = 0;
  for (ChainIndex k = 0; k <= 3; ++k) {
    auto const L = prefix(k);
    auto const atoms = codes_of(L);
    std::vector<FreeElement> exhaustive;
    for (auto c : atoms) exhaustive.push_back(ext.element(c));
    for (auto& g : base_bowties(ext, atoms)) exhaustive.push_back(std::move(g));
    for (auto const& x : exhaustive) {
      for (auto const& y : exhaustive) {
        if (ext.leq(x, y)) run(x, y, L, k <= 2);
      }
    }
    std::vector<FreeElement> sampled;
    std::set<FreeElement> seen;
    while (sampled.size() < 5000) {
      auto x = random_element(rng, ext, atoms);
      if (seen.insert(x).second) sampled.push_back(std::move(x));
      if (k == 0 && seen.size() >= 300) break;
    }
    for (auto const& x : sampled) {
      for (auto const& y : sampled) {
        if (ext.leq(x, y)) run(x, y, L, false);
      }
    }
    corpus_total += exhaustive.size() + sampled.size();
  }
  return std::to_string(pairs) + " related pairs from " +
         std::to_string(corpus_total) + " corpus elements, " +
         std::to_string(calls) + " verified calls (" +
         std::to_string(certificates) + " certificates), " +
         std::to_string(brute_checked) + " cross-checked against F_1(∅)";
}

// ---------------------------------------------------------------------------
// 8. Lemmas on supports, substitution, intersections, suprema

std::vector<std::vector<Code>> subsemilattices(std::vector<Code> const& carrier) {
  auto const& base = chain_extension().base();
  std::vector<std::vector<Code>> out;
  std::size_t const m = carrier.size() - 1;  // carrier[0] is zero
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Code> s{carrier[0]};
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) s.push_back(carrier[i + 1]);
    }
    bool closed = true;
    for (auto x : s) {
      for (auto y : s) {
        if (std::find(s.begin(), s.end(), base.join(x, y)) == s.end()) {
          closed = false;
        }
      }
    }
    if (closed) {
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string lemmas() {
  Tally t;
  auto const& ext = chain_extension();
  Rng rng(5);
  std::size_t const samples = 10000;

  // Fix[Y/X].
  std::size_t fix_cases = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::uniform_int_distribution<ChainIndex> len(0, 3);
    auto const C = prefix(len(rng));
    std::vector<ChainIndex> X = C, Y = C;
    ChainIndex next = C.size();
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 4; ++i) {
      (coin(rng) ? X : Y).push_back(next);
      next += 1 + (rng() % 3);
    }
    if (X.size() > Y.size()) std::swap(X, Y);
    auto const x = random_element(rng, ext, codes_of(C));
    t.require(fix_check(x, X, Y), [&] {
      return "x[Y/X] != x for x=" + print_term(x) + ", X=" + show(X) + ", Y=" + show(Y);
    });
    // support(x[Y/X]) = e[support(x)]
    auto const xs = random_element(rng, ext, codes_of(X));
    auto const moved = substitute(xs, X, Y);
    std::vector<ChainIndex> image;
    for (auto i : support(xs)) {
      auto k = static_cast<std::size_t>(
          std::lower_bound(X.begin(), X.end(), i) - X.begin());
      image.push_back(Y[k]);
    }
    t.require(support(moved) == image,
              [&] { return "support does not follow the substitution"; });
    ++fix_cases;
  }
  // Exhaustive small case: X, Y within {0,1,2,3}, hypotheses met, x drawn
  // from base elements and base bowties of S(X ∩ Y).
  auto const U = prefix(4);
  for (std::uint32_t mx = 0; mx < 16; ++mx) {
    for (std::uint32_t my = 0; my < 16; ++my) {
      std::vector<ChainIndex> X, Y;
      for (ChainIndex i = 0; i < 4; ++i) {
        if ((mx >> i) & 1u) X.push_back(i);
        if ((my >> i) & 1u) Y.push_back(i);
      }
      auto const C = set_and(X, Y);
      bool const lower = std::equal(C.begin(), C.end(), X.begin()) &&
                         std::equal(C.begin(), C.end(), Y.begin());
      if (!lower || X.size() > Y.size()) continue;
      auto const atoms = codes_of(C);
      std::vector<FreeElement> xs;
      for (auto c : atoms) xs.push_back(ext.element(c));
      for (auto& g : base_bowties(ext, atoms)) xs.push_back(std::move(g));
      for (auto const& x : xs) {
        t.require(fix_check(x, X, Y), [&] { return "fix fails at " + print_term(x); });
        ++fix_cases;
      }
    }
  }

  // S(X ∩ Y) = S(X) ∩ S(Y).
  for (std::size_t s = 0; s < samples; ++s) {
    auto const X = random_index_set(rng, 12);
    auto const Y = random_index_set(rng, 12);
    auto sx = codes_of(X), sy = codes_of(Y), sxy = codes_of(set_and(X, Y));
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    std::sort(sxy.begin(), sxy.end());
    std::vector<Code> both;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                          std::back_inserter(both));
    t.require(both == sxy, [&] {
      return "S(X ∩ Y) != S(X) ∩ S(Y) for X=" + show(X) + ", Y=" + show(Y);
    });
  }
  // Directed union: S(X1 ∪ X2 ∪ X3) = ∪ S(Xi) for a chain X1 ⊆ X2 ⊆ X3.
  for (std::size_t s = 0; s < 1000; ++s) {
    auto const X1 = random_index_set(rng, 10);
    auto const X2 = set_or(X1, random_index_set(rng, 10));
    auto const X3 = set_or(X2, random_index_set(rng, 10));
    std::set<Code> acc;
    for (auto const* X : {&X1, &X2, &X3}) {
      for (auto c : codes_of(*X)) acc.insert(c);
    }
    auto top = codes_of(X3);
    t.require(std::set<Code>(top.begin(), top.end()) == acc,
              [&] { return "S of a directed union is not the union"; });
  }
  // Sub-semilattices of S(X) really are: joins in S(X ∩ Y) agree.
  for (std::size_t s = 0; s < 200; ++s) {
    auto const X = random_index_set(rng, 5);
    auto const table = s_lambda(X);
    auto const codes = codes_of(X);
    for (ElementId i = 0; i < table.size(); ++i) {
      for (ElementId j = 0; j < table.size(); ++j) {
        t.require(codes[table.join(i, j)] == ext.base().join(codes[i], codes[j]),
                  [&] { return "S(X) table disagrees with the base"; });
      }
    }
  }

  // R(S1 ∩ S2) = R(S1) ∩ R(S2) exhaustively over small sub-semilattices.
  std::size_t rd_pairs = 0, rd_subs = 0;
  {
    std::vector<ChainIndex> const zero_only{0};
    auto const subs = subsemilattices(codes_of(zero_only));
    std::vector<std::vector<Code>> feasible;
    for (auto const& s : subs) {
      try {
        if (count_R(ext.base(), s) <= 60000) feasible.push_back(s);
      } catch (Error const& e) {
        if (!is_guard_overflow(e.kind())) throw;
      }
    }
    rd_subs = feasible.size();
    std::map<std::vector<Code>, std::set<FreeElement>> enumerated;
    auto R = [&](std::vector<Code> const& s) -> std::set<FreeElement> const& {
      auto it = enumerated.find(s);
      if (it == enumerated.end()) {
        auto v = enumerate_R(ext, s);
        it = enumerated.emplace(s, std::set<FreeElement>(v.begin(), v.end())).first;
      }
      return it->second;
    };
    for (std::size_t i = 0; i < feasible.size(); ++i) {
      for (std::size_t k = i; k < feasible.size(); ++k) {
        std::vector<Code> meet;
        std::set_intersection(feasible[i].begin(), feasible[i].end(),
                              feasible[k].begin(), feasible[k].end(),
                              std::back_inserter(meet));
        auto const& r1 = R(feasible[i]);
        auto const& r2 = R(feasible[k]);
        std::vector<FreeElement> both;
        std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(),
                              std::back_inserter(both));
        auto const& r12 = R(meet);
        t.require(std::equal(both.begin(), both.end(), r12.begin(), r12.end()),
                  [&] { return "R(S1 ∩ S2) != R(S1) ∩ R(S2)"; });
        // Directed union on the 2-chain S1 ∩ S2 ⊆ S1.
        t.require(std::includes(r1.begin(), r1.end(), r12.begin(), r12.end()),
                  [&] { return "R is not monotone on a chain"; });
        ++rd_pairs;
      }
    }
  }
  // Sampled: membership of random elements of R(S({0,1})).
  {
    std::vector<ChainIndex> const two{0, 1};
    auto const atoms = codes_of(two);
    auto const subs = subsemilattices(atoms);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      auto const& s1 = subs[pick(rng)];
      auto const& s2 = subs[pick(rng)];
      std::vector<Code> meet;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                            std::back_inserter(meet));
      std::vector<Code> either;
      std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(),
                     std::back_inserter(either));
      auto const x = random_element(rng, ext, either, SampleShape{64, 1});
      t.require(in_R(x, meet) == (in_R(x, s1) && in_R(x, s2)),
                [&] { return "membership of " + print_term(x) + " disagrees"; });
    }
  }

  // Supci.
  std::size_t supci_cases = 0;
  auto supci_case = [&](std::vector<ChainIndex> const& X, FreeElement const& x) {
    bool const fast = supci_check(X, x);
    bool premise = std::all_of(X.begin(), X.end(), [&](ChainIndex i) {
      return ext.leq(ext.element(chain::c(i)), x);
    });
    bool const direct = !premise || ext.leq(ext.element(chain::c(X.back())), x);
    t.require(fast && direct, [&] {
      return "supremum property fails for " + print_term(x) + " and X=" + show(X);
    });
    ++supci_cases;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    auto X = random_index_set(rng, 6);
    if (X.empty()) X.push_back(rng() % 6);
    supci_case(X, random_element(rng, ext, codes_of(prefix(6))));
  }
  {
    auto const L = prefix(3);
    auto const atoms = codes_of(L);
    std::vector<FreeElement> xs;
    for (auto c : atoms) xs.push_back(ext.element(c));
    for (auto& g : base_bowties(ext, atoms)) xs.push_back(std::move(g));
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      std::vector<ChainIndex> X;
      for (ChainIndex i = 0; i < 3; ++i) {
        if ((mask >> i) & 1u) X.push_back(i);
      }
      for (auto const& x : xs) supci_case(X, x);
    }
  }
  return std::to_string(fix_cases) + " substitution cases, " +
         std::to_string(samples) + " S-intersection samples, " +
         std::to_string(rd_pairs) + " exhaustive R-intersection pairs over " +
         std::to_string(rd_subs) + " sub-semilattices of S({0}) + " +
         std::to_string(samples) + " samples, " + std::to_string(supci_cases) +
         " supremum cases";
}

// ---------------------------------------------------------------------------
// 9. Θ⁺ is a V-measure

std::string theta_plus_suite() {
  Tally t;
  auto const corpus = lattices_up_to(6);
  std::size_t pairs_tested = 0;
  for (auto const& s : corpus) {
    auto const l = FiniteLattice::from_semilattice(s);
    auto const conc = all_congruences(l);
    auto const filtered = congruences_by_partition_filter(l);
    auto closure = conc.members;
    std::sort(closure.begin(), closure.end());
    t.require(closure == filtered, [&] {
      return "congruence closure disagrees with the partition filter on a " +
             std::to_string(s.size()) + "-element lattice";
    });
    auto const m = theta_plus_measure(l);
    t.require(is_poset_measure(m), [&] { return "Θ⁺ is not a poset measure"; });
    auto const pairs = default_value_pairs(m);
    pairs_tested += pairs.size();
    auto const w = find_v_measure_failure(m, pairs);
    t.require(!w.has_value(), [&] {
      return "Θ⁺ fails the V-measure property at (" + m.poset.name(w->x) + ", " +
             m.poset.name(w->y) + ")";
    });
  }
  return std::to_string(corpus.size()) + " lattices with <= 6 elements, " +
         std::to_string(pairs_tested) + " (a, b) pairs";
}

// ---------------------------------------------------------------------------
// 10. Counterexample measure

std::string counterexample_suite() {
  Tally t;
  auto const& ext = chain_extension();
  auto const a = ext.element(chain::a()), b = ext.element(chain::b());
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::uint32_t d = 0; d <= 2; ++d) {
      auto const m = counterexample_measure(n, d);
      t.require(is_poset_measure(m), [&] {
        return "counterexample_measure(" + std::to_string(n) + ") is not a measure";
      });
      auto const w = find_v_measure_failure(m);
      t.require(w && w->a == a && w->b == b && w->x == 0 && w->y == n, [&] {
        return "counterexample_measure(" + std::to_string(n) +
               ") lacks the (0, top, a, b) failure";
      });
    }
  }
  return "n = 2..6, depth 0..2: measures valid, each fails at (0, n, a, b)";
}

// ---------------------------------------------------------------------------
// 11. Monotone refinement

void chains_below(FiniteJoinSemilattice const& s, ElementId top, std::size_t len,
                  std::vector<ElementId>& cur,
                  std::function<void(std::vector<ElementId> const&)> const& f) {
  f(cur);
  if (cur.size() == len) return;
  for (ElementId c = 0; c < s.size(); ++c) {
    if (!s.leq(c, top) || (!cur.empty() && !s.leq(cur.back(), c))) continue;
    cur.push_back(c);
    chains_below(s, top, len, cur, f);
    cur.pop_back();
  }
}

std::string refinement_suite() {
  Tally t;
  auto const corpus = distributive_up_to(5);
  std::size_t instances = 0;
  for (auto const& s : corpus) {
    for (ElementId a = 0; a < s.size(); ++a) {
      for (ElementId b = 0; b < s.size(); ++b) {
        std::vector<ElementId> cur;
        chains_below(s, s.join(a, b), 4, cur, [&](auto const& chain) {
          RefinementProblem p{s, a, b, chain};
          ++instances;
          auto where = [&] {
            return " on a " + std::to_string(s.size()) + "-element semilattice, a=" +
                   s.name(a) + ", b=" + s.name(b) + ", chain length " +
                   std::to_string(chain.size());
          };
          try {
            t.require(is_valid_witness(p, refine_lattice(p)),
                      [&] { return "lattice algorithm" + where(); });
            t.require(is_valid_witness(p, refine_strongly_distributive(p)),
                      [&] { return "join-irreducible algorithm" + where(); });
            std::vector<std::size_t> reverse(chain.size());
            std::iota(reverse.rbegin(), reverse.rend(), 0u);
            std::vector<std::size_t> middle_out;
            for (std::size_t k = chain.size() / 2, i = 0; i < chain.size(); ++i) {
              middle_out.push_back((k + i) % chain.size());
            }
            for (auto const& order : {std::vector<std::size_t>{}, reverse, middle_out}) {
              t.require(is_valid_witness(p, refine_sequential(p, order)),
                        [&] { return "sequential algorithm" + where(); });
            }
            auto const bf = refine_bruteforce(p);
            t.require(bf && is_valid_witness(p, *bf),
                      [&] { return "brute force unsatisfiable" + where(); });
          } catch (Error const& e) {
            throw SuiteFailure{std::string(e.what()) + where()};
          }
        });
      }
    }
  }
  std::size_t unsat = 0;
  for (ChainIndex k = 1; k <= 3; ++k) {
    auto const L = prefix(k);
    auto const s = s_lambda(L);
    RefinementProblem p{s, s.id_of("a"), s.id_of("b"), {}};
    for (auto i : L) p.chain.push_back(s.id_of("c(" + std::to_string(i) + ")"));
    t.require(!refine_bruteforce(p).has_value(), [&] {
      return "refinement unexpectedly exists in S(" + show(L) + ")";
    });
    ++unsat;
  }
  return std::to_string(corpus.size()) + " distributive semilattices, " +
         std::to_string(instances) + " chains x 6 algorithm runs, " +
         std::to_string(unsat) + " S(Λ) instances unsatisfiable";
}

struct Entry {
  char const* name;
  std::string (*run)();
};

Entry const kSuites[] = {
    {"semilattice-laws", semilattice_laws},
    {"free-structure", free_structure},
    {"join-oracle", join_oracle},
    {"projection", projection},
    {"bowtie-identities", bowtie_identities},
    {"functor-laws", functor_laws},
    {"interpolation", interpolation},
    {"lemmas", lemmas},
    {"theta-plus", theta_plus_suite},
    {"counterexample", counterexample_suite},
    {"monotone-refinement", refinement_suite},
};

}  // namespace

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = [] {
    std::vector<std::string> v;
    for (auto const& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string const& name) {
  for (auto const& e : kSuites) {
    if (name != e.name) continue;
    SuiteResult r{name, false, {}, 0};
    auto const start = std::chrono::steady_clock::now();
    try {
      r.detail = e.run();
      r.passed = true;
    } catch (SuiteFailure const& f) {
      r.detail = f.what;
    } catch (Error const& err) {
      r.detail = err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    return r;
  }
  throw Error(ErrorKind::unknown_element, "no suite named " + name, {name});
}

}  // namespace meetless
