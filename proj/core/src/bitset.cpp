#include "prcomb/bitset.hpp"

namespace prcomb {

void Bitset::clear_tail() {
  if (size_ & 63) {
    words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }
}

void Bitset::or_shift_left(std::uint64_t k) {
  if (k >= size_ || words_.empty()) return;
  const std::uint64_t wshift = k >> 6;
  const unsigned bshift = static_cast<unsigned>(k & 63);
  for (std::uint64_t i = words_.size(); i-- > wshift;) {
    std::uint64_t v = words_[i - wshift] << bshift;
    if (bshift && i > wshift) v |= words_[i - wshift - 1] >> (64 - bshift);
    words_[i] |= v;
  }
  clear_tail();
}

Bitset Bitset::shifted_left(std::uint64_t k) const {
  Bitset out(size_);
  if (k >= size_ || words_.empty()) return out;
  const std::uint64_t wshift = k >> 6;
  const unsigned bshift = static_cast<unsigned>(k & 63);
  for (std::uint64_t i = words_.size(); i-- > wshift;) {
    std::uint64_t v = words_[i - wshift] << bshift;
    if (bshift && i > wshift) v |= words_[i - wshift - 1] >> (64 - bshift);
    out.words_[i] = v;
  }
  out.clear_tail();
  return out;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  const std::uint64_t n = std::min(words_.size(), o.words_.size());
  for (std::uint64_t i = 0; i < n; ++i) words_[i] |= o.words_[i];
  clear_tail();
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::uint64_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  const std::uint64_t n = std::min(words_.size(), o.words_.size());
  for (std::uint64_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::uint64_t Bitset::next_set(std::uint64_t from) const {
  if (from >= size_) return npos;
  std::uint64_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return wi * 64 + static_cast<unsigned>(std::countr_zero(w));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

std::vector<std::uint64_t> Bitset::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for_each_set([&](std::uint64_t i) { out.push_back(i); });
  return out;
}

}  // namespace prcomb
