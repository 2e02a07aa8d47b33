#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace prcomb {

/// Packed bit array over [0, size). Backs every window evaluation; the
/// subset-sum kernel relies on or_shift_left being word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::uint64_t size() const { return size_; }

  bool test(std::uint64_t i) const {
    return i < size_ && (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  /// acc |= acc << k, truncated at size. One pass, high word first.
  void or_shift_left(std::uint64_t k);

  /// this << k, truncated at size.
  Bitset shifted_left(std::uint64_t k) const;

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  /// this &= ~o
  Bitset& subtract(const Bitset& o);

  bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }

  /// Smallest set bit >= from, or npos.
  std::uint64_t next_set(std::uint64_t from) const;
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  std::vector<std::uint64_t> elements() const;

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::uint64_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  void clear_tail();
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace prcomb
