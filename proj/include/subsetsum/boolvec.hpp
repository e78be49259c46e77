#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace subsetsum {

/// Word-packed 0/1 coefficient vector. Bit i is the coefficient of x^i in a
/// characteristic polynomial; doubles as the dense member set behind SumSet
/// and CardSumSet. Bits past size() are always zero.
class BoolVec {
 public:
  BoolVec() : len_(1), w_(1, 0) {}
  explicit BoolVec(std::size_t len) : len_(len), w_(words_for(len), 0) {
    assert(len >= 1);
  }

  std::size_t size() const { return len_; }

  bool test(std::size_t i) const {
    return i < len_ && (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < len_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }

  // Index of the highest set bit, or -1 if empty.
  std::ptrdiff_t highest_set() const {
    for (std::size_t wi = w_.size(); wi-- > 0;)
      if (w_[wi])
        return static_cast<std::ptrdiff_t>(wi * 64 + 63 -
                                           std::countl_zero(w_[wi]));
    return -1;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        unsigned b = std::countr_zero(x);
        f(wi * 64 + b);
        x &= x - 1;
      }
    }
  }

  // *this |= (*this or src) << shift, truncated at size(). Safe when
  // &src == this.
  void or_shifted(const BoolVec& src, std::size_t shift) {
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t nw = w_.size();
    const std::size_t sw = src.w_.size();
    for (std::size_t i = nw; i-- > ws;) {
      const std::size_t j = i - ws;
      if (j >= sw) continue;
      std::uint64_t v = src.w_[j] << bs;
      if (bs && j > 0) v |= src.w_[j - 1] >> (64 - bs);
      w_[i] |= v;
    }
    mask_tail();
  }

  bool operator==(const BoolVec& o) const {
    return len_ == o.len_ && w_ == o.w_;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  // FNV-1a over (length, words); the 64-bit fingerprint used by the
  // benchmark harness cross-checks.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
      for (int k = 0; k < 8; ++k) {
        h ^= (x >> (8 * k)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(len_);
    for (std::uint64_t x : w_) mix(x);
    return h;
  }

 private:
  static std::size_t words_for(std::size_t len) { return (len + 63) / 64; }

  void mask_tail() {
    const unsigned r = len_ & 63;
    if (r) w_.back() &= (std::uint64_t{1} << r) - 1;
  }

  std::size_t len_;
  std::vector<std::uint64_t> w_;
};

}  // namespace subsetsum
