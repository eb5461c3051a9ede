#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "meetless/simd/bitkernels.hpp"

namespace meetless {

// A growable set of small integers packed into words.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= simd::Word{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(simd::Word{1} << (i & 63));
  }

  std::span<simd::Word> words() noexcept { return words_; }
  std::span<simd::Word const> words() const noexcept { return words_; }

  std::size_t count() const { return simd::popcount(words_); }
  bool any() const;
  bool is_subset_of(BitSet const& other) const {
    return simd::is_subset(words_, other.words_);
  }
  BitSet& operator&=(BitSet const& other) {
    simd::and_into(words_, other.words_);
    return *this;
  }
  BitSet& operator|=(BitSet const& other) {
    simd::or_into(words_, other.words_);
    return *this;
  }
  friend bool operator==(BitSet const& a, BitSet const& b) {
    return a.nbits_ == b.nbits_ && simd::equal(a.words_, b.words_);
  }

  // Indices of set bits in increasing order.
  std::vector<std::uint32_t> members() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<simd::Word> words_;
};

// Square bit matrix; row(i) is the set {j : bit (i,j) is set}.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (words_[i * stride_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    words_[i * stride_ + (j >> 6)] |= simd::Word{1} << (j & 63);
  }

  std::span<simd::Word const> row(std::size_t i) const noexcept {
    return {words_.data() + i * stride_, stride_};
  }
  std::span<simd::Word> row(std::size_t i) noexcept {
    return {words_.data() + i * stride_, stride_};
  }

  // Column indices of the set bits of row i, increasing.
  std::vector<std::uint32_t> row_members(std::size_t i) const;

  BitMatrix transposed() const;

  // Reflexive-transitive closure (Warshall, one row-OR per (k, i) pair).
  void close_reflexive_transitive();

  // First (i, j) with i != j, bit (i,j) and bit (j,i) both set.
  bool find_symmetric_pair(std::size_t& i, std::size_t& j) const;

  // First (i, k) with (i,j), (j,k) set but (i,k) unset for some j.
  bool find_transitivity_gap(std::size_t& i, std::size_t& k) const;

  friend bool operator==(BitMatrix const& a, BitMatrix const& b) {
    return a.n_ == b.n_ && simd::equal(a.words_, b.words_);
  }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<simd::Word> words_;
};

}  // namespace meetless
