#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sigmark {

// Packed bit vector over 64-bit words, little-endian bit order within a word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void xor_eq(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::size_t(std::popcount(w));
    return c;
  }

  std::size_t hamming(const BitVec& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += std::size_t(std::popcount(words_[w] ^ o.words_[w]));
    return c;
  }

  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }

  void clear() { for (auto& w : words_) w = 0; }

  bool operator==(const BitVec& o) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline BitVec xor_of(const BitVec& a, const BitVec& b) {
  BitVec r = a;
  r.xor_eq(b);
  return r;
}

}  // namespace sigmark
