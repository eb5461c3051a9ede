#include "meetless/chain.hpp"

#include <algorithm>
#include <iterator>

#include "meetless/error.hpp"

namespace meetless {
namespace {

struct Parts {
  bool a = false;
  bool b = false;
  std::optional<ChainIndex> c;
};

Parts parts_of(Code code) {
  auto const e = ChainElement::from_code(code);
  Parts p;
  switch (e.tag) {
    case ChainTag::zero: break;
    case ChainTag::a: p.a = true; break;
    case ChainTag::b: p.b = true; break;
    case ChainTag::ab: p.a = p.b = true; break;
    case ChainTag::c: p.c = e.index; break;
    case ChainTag::ac: p.a = true; p.c = e.index; break;
    case ChainTag::bc: p.b = true; p.c = e.index; break;
  }
  return p;
}

Code code_of(Parts const& p) {
  if (p.a && p.b) return chain::ab();
  if (p.c) {
    if (p.a) return chain::ac(*p.c);
    if (p.b) return chain::bc(*p.c);
    return chain::c(*p.c);
  }
  if (p.a) return chain::a();
  if (p.b) return chain::b();
  return chain::zero();
}

bool is_sorted_set(std::span<ChainIndex const> xs) {
  return std::adjacent_find(xs.begin(), xs.end(),
                            std::greater_equal<>{}) == xs.end();
}

std::vector<ChainIndex> sorted_set(std::span<ChainIndex const> xs) {
  std::vector<ChainIndex> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool subset(std::span<ChainIndex const> a, std::span<ChainIndex const> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ChainIndex> intersection(std::span<ChainIndex const> a,
                                     std::span<ChainIndex const> b) {
  std::vector<ChainIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// A lower subset L of the chain X: every element of X below a member of L is
// in L, i.e. L is a prefix of sorted X.
bool is_lower_subset(std::span<ChainIndex const> l,
                     std::span<ChainIndex const> x) {
  return l.size() <= x.size() && std::equal(l.begin(), l.end(), x.begin());
}

void collect_support(FreeElement const& x, std::vector<ChainIndex>& out) {
  if (x.is_base()) {
    auto const e = ChainElement::from_code(x.code());
    if (e.indexed()) out.push_back(e.index);
    return;
  }
  collect_support(x.diagonal(), out);
  for (auto const& t : x.triples()) {
    collect_support(t.u, out);
    collect_support(t.v, out);
    collect_support(t.w, out);
  }
}

std::string index_list(std::span<ChainIndex const> xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

}  // namespace

Code ChainBase::join(Code x, Code y) const {
  auto const p = parts_of(x);
  auto const q = parts_of(y);
  Parts r;
  r.a = p.a || q.a;
  r.b = p.b || q.b;
  if (p.c && q.c) {
    r.c = std::max(*p.c, *q.c);
  } else {
    r.c = p.c ? p.c : q.c;
  }
  return code_of(r);
}

std::string ChainBase::name(Code x) const {
  auto const e = ChainElement::from_code(x);
  auto const ci = "c(" + std::to_string(e.index) + ")";
  switch (e.tag) {
    case ChainTag::zero: return "0";
    case ChainTag::a: return "a";
    case ChainTag::b: return "b";
    case ChainTag::ab: return "join(a,b)";
    case ChainTag::c: return ci;
    case ChainTag::ac: return "join(a," + ci + ")";
    case ChainTag::bc: return "join(b," + ci + ")";
  }
  return "?";
}

std::shared_ptr<FreeExtension const> const& chain_extension_ptr() {
  static auto const ext =
      std::make_shared<FreeExtension const>(std::make_shared<ChainBase>());
  return ext;
}

FreeExtension const& chain_extension() { return *chain_extension_ptr(); }

std::vector<Code> s_lambda_codes(std::span<ChainIndex const> indices) {
  auto const xs = sorted_set(indices);
  std::vector<Code> out{chain::zero(), chain::a(), chain::b(), chain::ab()};
  for (auto i : xs) {
    out.push_back(chain::c(i));
    out.push_back(chain::ac(i));
    out.push_back(chain::bc(i));
  }
  return out;
}

FiniteJoinSemilattice s_lambda(std::span<ChainIndex const> indices) {
  ChainBase const base;
  auto const codes = s_lambda_codes(indices);
  std::size_t const n = codes.size();
  std::vector<std::string> names;
  for (auto c : codes) names.push_back(base.name(c));
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Code const j = base.join(codes[x], codes[y]);
      auto it = std::find(codes.begin(), codes.end(), j);
      table[x * n + y] = static_cast<ElementId>(it - codes.begin());
    }
  }
  return semilattice_from_joins(std::move(names), 0, std::move(table));
}

IndexMap IndexMap::make(std::vector<ChainIndex> source,
                        std::vector<ChainIndex> target,
                        std::vector<ChainIndex> image) {
  if (!is_sorted_set(source) || !is_sorted_set(target)) {
    throw Error(ErrorKind::parse_error,
                "index sets must be strictly increasing lists");
  }
  if (image.size() != source.size()) {
    throw Error(ErrorKind::parse_error, "index map is not total");
  }
  for (auto v : image) {
    if (!std::binary_search(target.begin(), target.end(), v)) {
      throw Error(ErrorKind::unknown_element,
                  "value " + std::to_string(v) + " outside the target chain");
    }
  }
  for (std::size_t k = 1; k < image.size(); ++k) {
    if (image[k - 1] > image[k]) {
      throw Error(ErrorKind::not_isotone,
                  std::to_string(source[k - 1]) + " <= " +
                      std::to_string(source[k]) + " but images decrease",
                  {std::to_string(source[k - 1]), std::to_string(source[k])});
    }
  }
  IndexMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.image_ = std::move(image);
  return f;
}

ChainIndex IndexMap::operator()(ChainIndex i) const {
  auto it = std::lower_bound(source_.begin(), source_.end(), i);
  if (it == source_.end() || *it != i) {
    throw Error(ErrorKind::unknown_element,
                "index " + std::to_string(i) + " outside the source chain");
  }
  return image_[static_cast<std::size_t>(it - source_.begin())];
}

Code IndexMap::on_code(Code code) const {
  auto e = ChainElement::from_code(code);
  if (e.indexed()) e.index = (*this)(e.index);
  return e.code();
}

JoinZeroHomomorphism s_map(IndexMap const& f) {
  auto src = s_lambda(f.source());
  auto tgt = s_lambda(f.target());
  auto const src_codes = s_lambda_codes(f.source());
  auto const tgt_codes = s_lambda_codes(f.target());
  std::vector<ElementId> graph;
  for (auto c : src_codes) {
    auto it = std::find(tgt_codes.begin(), tgt_codes.end(), f.on_code(c));
    graph.push_back(static_cast<ElementId>(it - tgt_codes.begin()));
  }
  return JoinZeroHomomorphism::make(std::move(src), std::move(tgt),
                                    std::move(graph));
}

std::vector<ChainIndex> support(FreeElement const& x) {
  std::vector<ChainIndex> out;
  collect_support(x, out);
  return sorted_set(out);
}

FreeElement substitute(FreeElement const& x, std::span<ChainIndex const> from,
                       std::span<ChainIndex const> to) {
  auto const xs = sorted_set(from);
  auto const ys = sorted_set(to);
  if (!subset(support(x), xs)) {
    throw Error(ErrorKind::support_not_contained,
                "support " + index_list(support(x)) + " not inside " +
                    index_list(xs));
  }
  if (xs.size() > ys.size()) {
    throw Error(ErrorKind::too_short,
                index_list(ys) + " is shorter than " + index_list(xs));
  }
  std::vector<ChainIndex> image(ys.begin(),
                                ys.begin() + static_cast<long>(xs.size()));
  auto const e = IndexMap::make(xs, ys, std::move(image));
  return lift_hom(chain_extension(),
                  [&e](Code c) { return e.on_code(c); }, x);
}

bool fix_check(FreeElement const& x, std::span<ChainIndex const> from,
               std::span<ChainIndex const> to) {
  auto const xs = sorted_set(from);
  auto const ys = sorted_set(to);
  auto const common = intersection(xs, ys);
  if (!is_lower_subset(common, xs) || !is_lower_subset(common, ys)) {
    throw Error(ErrorKind::hypothesis_violated,
                index_list(common) + " is not a lower subset of both " +
                    index_list(xs) + " and " + index_list(ys));
  }
  if (!subset(support(x), common)) {
    throw Error(ErrorKind::support_not_contained,
                "element is not in F(X ∩ Y)");
  }
  return substitute(x, xs, ys) == x;
}

namespace {

class Interpolator {
 public:
  Interpolator(std::span<ChainIndex const> X, std::span<ChainIndex const> Y)
      : X_(X), Y_(Y) {}

  Interpolation run(FreeElement const& x, FreeElement const& y) const {
    FreeExtension const& ext = chain_extension();
    if (subset(support(x), Y_)) return interpolant(x);
    if (subset(support(y), X_)) return interpolant(y);
    // Neither support is contained in the other side, so Y \ X is nonempty.
    std::uint32_t const m = x.rank();
    std::uint32_t const n = y.rank();
    if (m == 0 && n == 0) {
      // c_i <= x <= y for some i in supp(x) \ Y forces y in
      // {c_j, a v c_j, b v c_j} with j in Y \ X and j > i; c_xi <= c_j.
      return certificate();
    }
    if (m < n) return run(x, pi_down(y, m));

    bool const single = ext.is_zero(x.diagonal()) && x.triples().size() == 1;
    if (!single) {
      std::vector<FreeElement> parts;
      if (!ext.is_zero(x.diagonal())) parts.push_back(x.diagonal());
      for (auto const& t : x.triples()) {
        parts.push_back(ext.bowtie_at(m, t.u, t.v, t.w));
      }
      FreeElement z = ext.zero();
      for (auto const& part : parts) {
        auto r = run(part, y);
        if (!r.is_interpolant()) return r;
        z = ext.join(z, r.z);
      }
      return interpolant(std::move(z));
    }

    // x = bowtie(u, v, w) at level m >= n; y seen one level down.
    Triple const& t = x.triples().front();
    FreeElement const yy = m == n ? y.diagonal() : y;
    if (ext.leq(t.u, yy)) return run(t.u, yy);
    if (ext.leq(t.w, yy)) return run(t.w, yy);
    throw Error(ErrorKind::internal,
                "bowtie below y with neither u nor w below the projection");
  }

 private:
  static Interpolation interpolant(FreeElement z) {
    return {Interpolation::Kind::interpolant, std::move(z), 0};
  }
  Interpolation certificate() const {
    std::vector<ChainIndex> diff;
    std::set_difference(Y_.begin(), Y_.end(), X_.begin(), X_.end(),
                        std::back_inserter(diff));
    return {Interpolation::Kind::certificate, chain_extension().zero(),
            diff.front()};
  }

  std::span<ChainIndex const> X_;
  std::span<ChainIndex const> Y_;
};

}  // namespace

Interpolation interpolate(FreeElement const& x, std::span<ChainIndex const> X,
                          FreeElement const& y,
                          std::span<ChainIndex const> Y) {
  FreeExtension const& ext = chain_extension();
  auto const xs = sorted_set(X);
  auto const ys = sorted_set(Y);
  if (!subset(support(x), xs) || !subset(support(y), ys)) {
    throw Error(ErrorKind::support_violation,
                "supports must lie in the given index sets");
  }
  if (!ext.leq(x, y)) throw Error(ErrorKind::not_leq, "x is not below y");

  auto r = Interpolator(xs, ys).run(x, y);

  bool verified = false;
  if (r.is_interpolant()) {
    auto const common = intersection(xs, ys);
    verified = ext.leq(x, r.z) && ext.leq(r.z, y) &&
               subset(support(r.z), common);
  } else {
    verified = !subset(ys, xs) &&
               !std::binary_search(xs.begin(), xs.end(), r.xi) &&
               std::binary_search(ys.begin(), ys.end(), r.xi) &&
               ext.leq(ext.element(chain::c(r.xi)), y);
  }
  if (!verified) {
    throw Error(ErrorKind::internal, "interpolation result failed to verify");
  }
  return r;
}

bool supci_check(std::span<ChainIndex const> X, FreeElement const& x) {
  if (X.empty()) {
    throw Error(ErrorKind::parse_error, "index set must be nonempty");
  }
  ChainBase const base;
  // c_i <= x iff c_i <= pi^n_0(x), since c_i lies in S(Λ).
  Code const y = pi_down(x, 0).code();
  bool premise = std::all_of(X.begin(), X.end(), [&](ChainIndex i) {
    return base.leq(chain::c(i), y);
  });
  ChainIndex const xi = *std::max_element(X.begin(), X.end());
  return !premise || base.leq(chain::c(xi), y);
}

}  // namespace meetless
