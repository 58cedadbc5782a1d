#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eraskit {

/// Fixed-size bit vector over token positions. Used both for document
/// aliveness masks and for eraser keep-sets, so the set algebra
/// (intersection, union, complement-within-size) is the hot path.
///
/// Invariant: bits at indices >= size() are always zero, which makes
/// operator== a plain word comparison.
class Bitmask {
 public:
  Bitmask() = default;

  explicit Bitmask(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~std::uint64_t{0} : 0) {
    clear_tail();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t pos) const {
    return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
  }

  void set(std::size_t pos, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (pos % kWordBits);
    if (value) {
      words_[pos / kWordBits] |= bit;
    } else {
      words_[pos / kWordBits] &= ~bit;
    }
  }

  /// Sets the half-open range [begin, end) to one.
  void set_range(std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    const std::size_t first_word = begin / kWordBits;
    const std::size_t last_word = (end - 1) / kWordBits;
    const std::uint64_t head = ~std::uint64_t{0} << (begin % kWordBits);
    const std::uint64_t tail = ~std::uint64_t{0} >> (kWordBits - 1 - (end - 1) % kWordBits);
    if (first_word == last_word) {
      words_[first_word] |= head & tail;
      return;
    }
    words_[first_word] |= head;
    for (std::size_t w = first_word + 1; w < last_word; ++w) words_[w] = ~std::uint64_t{0};
    words_[last_word] |= tail;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool all() const { return count() == size_; }

  Bitmask& operator&=(const Bitmask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  Bitmask& operator|=(const Bitmask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  /// Removes every bit set in `other` (set difference).
  Bitmask& and_not(const Bitmask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
  }

  /// Complement within [0, size).
  Bitmask complement() const {
    Bitmask out(*this);
    for (std::uint64_t& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
  }

  bool is_subset_of(const Bitmask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  friend Bitmask operator&(Bitmask lhs, const Bitmask& rhs) { return lhs &= rhs; }
  friend Bitmask operator|(Bitmask lhs, const Bitmask& rhs) { return lhs |= rhs; }

  bool operator==(const Bitmask& other) const = default;

  /// Ascending indices of set bits.
  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(w * kWordBits + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kWordBits = 64;

  void clear_tail() {
    const std::size_t used = size_ % kWordBits;
    if (used != 0 && !words_.empty()) {
      words_.back() &= ~std::uint64_t{0} >> (kWordBits - used);
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace eraskit
