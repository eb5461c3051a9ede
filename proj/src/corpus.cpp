#include "meetless/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "meetless/error.hpp"
#include "meetless/json_io.hpp"

namespace meetless {
namespace {

constexpr std::size_t kMaxSize = 8;

// Strict order on k middle elements as a k*k bit code, row-major.
using Code64 = std::uint64_t;

bool rel(Code64 c, std::size_t k, std::size_t i, std::size_t j) {
  return (c >> (i * k + j)) & 1u;
}

Code64 relabel(Code64 c, std::size_t k, std::vector<std::size_t> const& p) {
  Code64 out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rel(c, k, i, j)) out |= Code64{1} << (p[i] * k + p[j]);
    }
  }
  return out;
}

// Full order with 0 at id 0 and top at id k+1.
BitMatrix full_order(Code64 c, std::size_t k) {
  std::size_t const n = k + 2;
  BitMatrix m(n);
  for (std::size_t x = 0; x < n; ++x) {
    m.set(0, x);
    m.set(x, n - 1);
    m.set(x, x);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rel(c, k, i, j)) m.set(i + 1, j + 1);
    }
  }
  return m;
}

bool has_all_joins(BitMatrix const& up) {
  std::size_t const n = up.size();
  BitSet common(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      simd::and_to(common.words(), up.row(x), up.row(y));
      bool found = false;
      for (auto z : common.members()) {
        if (simd::is_subset(common.words(), up.row(z))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::string> names_for(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("1");
  return names;
}

}  // namespace

std::vector<FiniteJoinSemilattice> lattices_of_size(std::size_t n) {
  if (n == 0) return {};
  if (n > kMaxSize) {
    throw Error(ErrorKind::too_large,
                "lattice generation is limited to " +
                    std::to_string(kMaxSize) + " elements");
  }
  auto const names = names_for(n);
  if (n <= 2) {
    BitMatrix m(n);
    for (std::size_t x = 0; x < n; ++x) {
      m.set(0, x);
      m.set(x, x);
    }
    return {semilattice_from_poset(FinitePoset::from_relation(names, m))};
  }
  std::size_t const k = n - 2;
  // Every poset has a linear extension, so strict orders contained in the
  // upper triangle cover every isomorphism class.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::size_t> perm(k);
  std::set<Code64> canonical;
  for (Code64 mask = 0; mask < (Code64{1} << slots.size()); ++mask) {
    Code64 c = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) c |= Code64{1} << (slots[s].first * k + slots[s].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < k && transitive; ++i) {
      for (std::size_t j = 0; j < k && transitive; ++j) {
        if (!rel(c, k, i, j)) continue;
        for (std::size_t l = 0; l < k; ++l) {
          if (rel(c, k, j, l) && !rel(c, k, i, l)) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive || !has_all_joins(full_order(c, k))) continue;
    std::iota(perm.begin(), perm.end(), 0);
    Code64 best = c;
    do {
      best = std::min(best, relabel(c, k, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    canonical.insert(best);
  }
  std::vector<FiniteJoinSemilattice> out;
  for (Code64 c : canonical) {
    out.push_back(semilattice_from_poset(
        FinitePoset::from_relation(names, full_order(c, k))));
  }
  return out;
}

std::vector<FiniteJoinSemilattice> lattices_up_to(std::size_t max_n) {
  std::vector<FiniteJoinSemilattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = lattices_of_size(n);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<FiniteJoinSemilattice> distributive_up_to(std::size_t max_n) {
  auto all = lattices_up_to(max_n);
  std::vector<FiniteJoinSemilattice> out;
  for (auto& s : all) {
    if (is_distributive(s)) out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t content_hash(FiniteJoinSemilattice const& s) {
  std::string const text = semilattice_to_json(s).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace meetless
