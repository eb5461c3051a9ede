#include "meetless/free_ext.hpp"

#include <algorithm>

#include "meetless/error.hpp"

namespace meetless {
namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // boost::hash_combine with a 64-bit constant
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4));
}

std::size_t hash_code(Code c) {
  std::uint64_t z = c + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

bool contains_triple(std::span<Triple const> sorted, Triple const& t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

std::uint32_t max_rank(FreeElement const& u, FreeElement const& v,
                       FreeElement const& w) {
  return std::max({u.rank(), v.rank(), w.rank()});
}

}  // namespace

std::optional<std::vector<Code>> TableBase::elements() const {
  std::vector<Code> out(s_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// ---------------------------------------------------------------------------
// FreeElement

std::uint32_t FreeElement::rank() const noexcept {
  return node_ ? node_->rank : 0;
}

FreeElement const& FreeElement::diagonal() const { return node_->diagonal; }

std::span<Triple const> FreeElement::triples() const {
  return node_->triples;
}

std::size_t FreeElement::hash() const noexcept {
  return node_ ? node_->hash : hash_code(code_);
}

bool operator==(FreeElement const& a, FreeElement const& b) {
  if (a.node_ == b.node_) return a.node_ != nullptr || a.code_ == b.code_;
  if (!a.node_ || !b.node_) return false;
  auto const& x = *a.node_;
  auto const& y = *b.node_;
  return x.hash == y.hash && x.rank == y.rank && x.diagonal == y.diagonal &&
         x.triples == y.triples;
}

std::strong_ordering operator<=>(FreeElement const& a, FreeElement const& b) {
  if (a.node_ == b.node_) {
    return a.node_ ? std::strong_ordering::equal : a.code_ <=> b.code_;
  }
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  // equal rank >= 1 here (rank 0 has no node and was handled above)
  auto const& x = *a.node_;
  auto const& y = *b.node_;
  if (auto c = x.diagonal <=> y.diagonal; c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.triples.begin(), x.triples.end(), y.triples.begin(), y.triples.end());
}

std::strong_ordering operator<=>(Triple const& a, Triple const& b) {
  if (auto c = a.u <=> b.u; c != 0) return c;
  if (auto c = a.v <=> b.v; c != 0) return c;
  return a.w <=> b.w;
}

FreeElement pi(FreeElement const& x) {
  return x.is_base() ? x : x.diagonal();
}

FreeElement pi_down(FreeElement const& x, std::uint32_t k) {
  if (k > x.rank()) {
    throw Error(ErrorKind::rank_too_high,
                "requested level " + std::to_string(k) + " above rank " +
                    std::to_string(x.rank()));
  }
  FreeElement y = x;
  while (y.rank() > k) y = y.diagonal();
  return y;
}

std::uint64_t complexity(FreeElement const& x) {
  return x.is_base() ? 0 : x.node_->complexity;
}

// ---------------------------------------------------------------------------
// FreeExtension

FreeElement FreeExtension::make_node(std::uint32_t level, FreeElement diagonal,
                                     std::vector<Triple> triples) const {
  auto node = std::make_shared<FreeNode>();
  node->rank = level;
  std::size_t h = mix(hash_code(level), diagonal.hash());
  std::uint64_t cx = 3 * complexity(diagonal) + 1;
  for (auto const& t : triples) {
    h = mix(mix(mix(h, t.u.hash()), t.v.hash()), t.w.hash());
    cx += complexity(t.u) + complexity(t.v) + complexity(t.w) + 1;
  }
  node->hash = h;
  node->complexity = cx;
  node->diagonal = std::move(diagonal);
  node->triples = std::move(triples);
  FreeElement e;
  e.node_ = std::move(node);
  return e;
}

bool FreeExtension::leq(FreeElement const& x, FreeElement const& y) const {
  if (x.is_base() && y.is_base()) return base_->leq(x.code(), y.code());
  std::uint32_t const m = x.rank();
  if (m < y.rank()) return leq(x, y.diagonal());
  // y viewed in R^m(S): its own set when of rank m, else the singleton {y}.
  bool const same_level = y.rank() == m;
  FreeElement const& py = same_level ? y.diagonal() : y;
  if (!leq(x.diagonal(), py)) return false;
  auto const ytriples =
      same_level ? y.triples() : std::span<Triple const>{};
  for (auto const& t : x.triples()) {
    if (same_level && contains_triple(ytriples, t)) continue;
    if (!leq(t.u, py) && !leq(t.w, py)) return false;
  }
  return true;
}

FreeElement FreeExtension::normalize(std::uint32_t level, FreeElement p,
                                     std::vector<Triple> triples) const {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  for (;;) {
    bool grew = false;
    std::vector<Triple> kept;
    kept.reserve(triples.size());
    for (auto& t : triples) {
      if (leq(t.u, p) || leq(t.w, p)) continue;  // absorbed by p
      if (leq(t.v, p)) {
        // p v bowtie(u,v,w) = p v w once v <= p
        p = join(p, t.w);
        grew = true;
        continue;
      }
      kept.push_back(std::move(t));
    }
    triples = std::move(kept);
    if (grew) continue;
    // conflict pair <u,v,w>, <v,u,w>: their join is w
    std::vector<bool> drop(triples.size(), false);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (drop[i]) continue;
      Triple const mirror{triples[i].v, triples[i].u, triples[i].w};
      auto it = std::lower_bound(triples.begin(), triples.end(), mirror);
      if (it != triples.end() && *it == mirror) {
        drop[i] = true;
        drop[static_cast<std::size_t>(it - triples.begin())] = true;
        p = join(p, triples[i].w);
        grew = true;
      }
    }
    if (!grew) break;
    std::vector<Triple> rest;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (!drop[i]) rest.push_back(std::move(triples[i]));
    }
    triples = std::move(rest);
  }
  if (triples.empty()) return p;
  return make_node(level, std::move(p), std::move(triples));
}

FreeElement FreeExtension::join(FreeElement const& x,
                                FreeElement const& y) const {
  if (x.is_base() && y.is_base()) {
    return FreeElement::base(base_->join(x.code(), y.code()));
  }
  if (x == y) return x;
  std::uint32_t const level = std::max(x.rank(), y.rank());
  FreeElement const& px = x.rank() == level ? x.diagonal() : x;
  FreeElement const& py = y.rank() == level ? y.diagonal() : y;
  std::vector<Triple> triples;
  if (x.rank() == level) {
    triples.insert(triples.end(), x.triples().begin(), x.triples().end());
  }
  if (y.rank() == level) {
    triples.insert(triples.end(), y.triples().begin(), y.triples().end());
  }
  FreeElement p = join(px, py);
  FreeElement result = normalize(level, std::move(p), std::move(triples));
  if (!leq(x, result) || !leq(y, result)) {
    throw Error(ErrorKind::internal, "join is not an upper bound");
  }
  return result;
}

FreeElement FreeExtension::join_all(std::span<FreeElement const> xs) const {
  FreeElement acc = zero();
  for (auto const& x : xs) acc = join(acc, x);
  return acc;
}

FreeElement FreeExtension::bowtie_at(std::uint32_t level, FreeElement const& u,
                                     FreeElement const& v,
                                     FreeElement const& w) const {
  if (level == 0 || max_rank(u, v, w) >= level) {
    throw Error(ErrorKind::rank_too_high,
                "bowtie components must lie below level " +
                    std::to_string(level));
  }
  if (!leq(w, join(u, v))) {
    throw Error(ErrorKind::not_in_c, "w is not below u v v");
  }
  if (u == v || is_zero(v) || is_zero(w)) return w;
  if (is_zero(u)) return zero();
  return make_node(level, zero(), {Triple{u, v, w}});
}

FreeElement FreeExtension::bowtie(FreeElement const& u, FreeElement const& v,
                                  FreeElement const& w) const {
  return bowtie_at(max_rank(u, v, w) + 1, u, v, w);
}

FreeElement FreeExtension::reduced_set(std::uint32_t level,
                                       FreeElement diagonal,
                                       std::vector<Triple> triples) const {
  if (level == 0 || diagonal.rank() >= level) {
    throw Error(ErrorKind::not_reduced, "diagonal must lie below the level");
  }
  for (auto const& t : triples) {
    if (max_rank(t.u, t.v, t.w) >= level) {
      throw Error(ErrorKind::not_reduced, "triple component above level");
    }
    if (!leq(t.w, join(t.u, t.v))) {
      throw Error(ErrorKind::not_in_c, "w is not below u v v");
    }
    if (t.u == t.v) {
      throw Error(ErrorKind::not_reduced, "triple of the form <u,u,w>");
    }
    if (leq(t.u, diagonal) || leq(t.v, diagonal) || leq(t.w, diagonal)) {
      throw Error(ErrorKind::not_reduced,
                  "triple component below the diagonal");
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  for (auto const& t : triples) {
    if (contains_triple(triples, Triple{t.v, t.u, t.w})) {
      throw Error(ErrorKind::not_reduced, "contains a conflicting pair");
    }
  }
  if (triples.empty()) return diagonal;
  return make_node(level, std::move(diagonal), std::move(triples));
}

bool FreeExtension::is_reduced(FreeElement const& x) const {
  if (x.is_base()) return true;
  std::uint32_t const level = x.rank();
  auto const& p = x.diagonal();
  auto const ts = x.triples();
  if (ts.empty() || p.rank() >= level || !is_reduced(p)) return false;
  if (!std::is_sorted(ts.begin(), ts.end()) ||
      std::adjacent_find(ts.begin(), ts.end()) != ts.end()) {
    return false;
  }
  for (auto const& t : ts) {
    if (max_rank(t.u, t.v, t.w) >= level) return false;
    if (!is_reduced(t.u) || !is_reduced(t.v) || !is_reduced(t.w)) return false;
    if (t.u == t.v || !leq(t.w, join(t.u, t.v))) return false;
    if (leq(t.u, p) || leq(t.v, p) || leq(t.w, p)) return false;
    if (contains_triple(ts, Triple{t.v, t.u, t.w})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FreeElement lift_hom(FreeExtension const& target, BaseMap const& f,
                     FreeElement const& x) {
  if (x.is_base()) return FreeElement::base(f(x.code()));
  std::uint32_t const level = x.rank();
  FreeElement acc = lift_hom(target, f, x.diagonal());
  for (auto const& t : x.triples()) {
    auto g = target.bowtie_at(level, lift_hom(target, f, t.u),
                              lift_hom(target, f, t.v),
                              lift_hom(target, f, t.w));
    acc = target.join(acc, g);
  }
  return acc;
}

namespace {

// Conflict pairs of non-diagonal triples over the carrier with every
// component outside ↓p; each pair lists <u,v,w> before <v,u,w>.
std::vector<std::pair<Triple, Triple>> conflict_pairs(
    Base const& base, std::span<Code const> carrier, Code p) {
  std::vector<std::pair<Triple, Triple>> out;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    Code u = carrier[i];
    if (base.leq(u, p)) continue;
    for (std::size_t j = i + 1; j < carrier.size(); ++j) {
      Code v = carrier[j];
      if (base.leq(v, p)) continue;
      Code uv = base.join(u, v);
      for (Code w : carrier) {
        if (base.leq(w, p) || !base.leq(w, uv)) continue;
        Triple t{FreeElement::base(u), FreeElement::base(v),
                 FreeElement::base(w)};
        Triple m{t.v, t.u, t.w};
        if (m < t) std::swap(t, m);
        out.emplace_back(std::move(t), std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.first < b.first;
  });
  return out;
}

std::size_t saturating_pow3(std::size_t k, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / 3) return cap + 1;
    r *= 3;
  }
  return r;
}

}  // namespace

std::size_t count_R(Base const& base, std::span<Code const> carrier) {
  // Saturates at 2^62 so the sum cannot wrap.
  std::size_t constexpr cap = std::size_t{1} << 62;
  std::size_t total = 0;
  for (Code p : carrier) {
    total += saturating_pow3(conflict_pairs(base, carrier, p).size(), cap);
    total = std::min(total, cap);
  }
  return total;
}

std::vector<FreeElement> enumerate_R(FreeExtension const& ext,
                                     std::span<Code const> carrier,
                                     EnumerationLimits limits) {
  Base const& base = ext.base();
  std::size_t const triples_at_zero =
      2 * conflict_pairs(base, carrier, base.zero()).size();
  if (triples_at_zero > limits.max_triples) {
    throw Error(ErrorKind::too_large,
                std::to_string(triples_at_zero) +
                    " non-diagonal triples exceed the bound of " +
                    std::to_string(limits.max_triples));
  }
  std::vector<std::vector<std::pair<Triple, Triple>>> per_diag;
  std::size_t total = 0;
  for (Code p : carrier) {
    per_diag.push_back(conflict_pairs(base, carrier, p));
    total += saturating_pow3(per_diag.back().size(), limits.max_elements);
    if (total > limits.max_elements) {
      throw Error(ErrorKind::too_large,
                  "more than " + std::to_string(limits.max_elements) +
                      " reduced sets");
    }
  }
  std::vector<FreeElement> out;
  out.reserve(total);
  for (std::size_t di = 0; di < carrier.size(); ++di) {
    auto const& pairs = per_diag[di];
    FreeElement const p = FreeElement::base(carrier[di]);
    std::vector<std::uint8_t> digit(pairs.size(), 0);
    for (;;) {
      std::vector<Triple> ts;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (digit[k] == 1) ts.push_back(pairs[k].first);
        if (digit[k] == 2) ts.push_back(pairs[k].second);
      }
      if (ts.empty()) {
        out.push_back(p);
      } else {
        std::sort(ts.begin(), ts.end());
        out.push_back(ext.reduced_set(1, p, std::move(ts)));
      }
      std::size_t k = 0;
      while (k < digit.size() && digit[k] == 2) digit[k++] = 0;
      if (k == digit.size()) break;
      ++digit[k];
    }
  }
  return out;
}

void collect_codes(FreeElement const& x, std::vector<Code>& out) {
  if (x.is_base()) {
    out.push_back(x.code());
    return;
  }
  collect_codes(x.diagonal(), out);
  for (auto const& t : x.triples()) {
    collect_codes(t.u, out);
    collect_codes(t.v, out);
    collect_codes(t.w, out);
  }
}

bool in_R(FreeElement const& x, std::span<Code const> carrier_sorted) {
  if (x.rank() > 1) return false;
  std::vector<Code> codes;
  collect_codes(x, codes);
  return std::all_of(codes.begin(), codes.end(), [&](Code c) {
    return std::binary_search(carrier_sorted.begin(), carrier_sorted.end(), c);
  });
}

}  // namespace meetless
