#ifndef SRGB_BITSET_HPP
#define SRGB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace srgb {

/// Fixed-length bit row backed by 64-bit words. Bits past size() are kept zero.
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const word_type *data() const { return words_.data(); }
  word_type *data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

  void set_all() {
    for (auto &w : words_)
      w = ~word_type{0};
    trim();
  }
  void clear() {
    for (auto &w : words_)
      w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }
  bool any() const { return !none(); }

  /// popcount(a & b) without materializing the intersection.
  static std::size_t intersection_count(const Bitset &a, const Bitset &b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset &subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend bool operator==(const Bitset &, const Bitset &) = default;

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_)
      return size_;
    std::size_t wi = from / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w)
        return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  void trim() {
    if (size_ % word_bits && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

} // namespace srgb

#endif // SRGB_BITSET_HPP
