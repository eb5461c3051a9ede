#include "meetless/bitmatrix.hpp"

#include <bit>

namespace meetless {

bool BitSet::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::vector<std::uint32_t> BitSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (simd::Word w = words_[wi]; w; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::uint32_t> BitMatrix::row_members(std::size_t i) const {
  std::vector<std::uint32_t> out;
  auto const r = row(i);
  for (std::size_t wi = 0; wi < r.size(); ++wi) {
    for (simd::Word w = r[wi]; w; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (test(i, j)) t.set(j, i);
    }
  }
  return t;
}

void BitMatrix::close_reflexive_transitive() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i);
  for (std::size_t k = 0; k < n_; ++k) {
    auto const rk = row(k);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != k && test(i, k)) simd::or_into(row(i), rk);
    }
  }
}

bool BitMatrix::find_symmetric_pair(std::size_t& i, std::size_t& j) const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (test(a, b) && test(b, a)) {
        i = a;
        j = b;
        return true;
      }
    }
  }
  return false;
}

bool BitMatrix::find_transitivity_gap(std::size_t& i, std::size_t& k) const {
  // Row i is closed iff row(j) is a subset of row(i) for every j in row(i).
  for (std::size_t a = 0; a < n_; ++a) {
    auto const ra = row(a);
    for (std::size_t b = 0; b < n_; ++b) {
      if (!test(a, b) || simd::is_subset(row(b), ra)) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (test(b, c) && !test(a, c)) {
          i = a;
          k = c;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace meetless
