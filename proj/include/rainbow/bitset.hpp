#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rainbow {

// Small dynamic bitset over a fixed universe size. Just what the set
// algebra needs: membership, popcount, word-wise boolean ops, iteration.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int universe_size() const { return nbits_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { words_.assign(words_.size(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  // -1 when no set bit at position >= from.
  int next_set(int from) const {
    for (int i = from; i < nbits_; ) {
      std::uint64_t w = words_[i >> 6] >> (i & 63);
      if (w) return i + std::countr_zero(w);
      i = (i | 63) + 1;
    }
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = next_set(0); i >= 0; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  // Raw word access for the cyclic-rotation sumset fast path. The caller
  // must keep bits past universe_size() clear.
  std::uint64_t word(size_t k) const { return words_[k]; }
  void set_word(size_t k, std::uint64_t w) { words_[k] = w; }
  size_t word_count() const { return words_.size(); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
