#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ncc {

/// Fixed-length packed bit vector. Used both as an index set over a group
/// table and as an adjacency row of a graph.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits, bool value = false)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, value ? ~word_type{0} : 0) {
    trim();
  }

  [[nodiscard]] std::size_t size() const noexcept { return nbits_; }
  [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
  [[nodiscard]] const word_type* data() const noexcept { return words_.data(); }
  [[nodiscard]] word_type* data() noexcept { return words_.data(); }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] bool any() const noexcept { return !none(); }

  /// First set bit at or after `from`, or size() when there is none.
  [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept {
    if (from >= nbits_) return nbits_;
    std::size_t w = from / kWordBits;
    word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (cur) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return nbits_;
      cur = words_[w];
    }
  }
  [[nodiscard]] std::size_t find_first() const noexcept { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type cur = words_[w];
      while (cur) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  [[nodiscard]] bool is_subset_of(const Bitset& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const Bitset& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  [[nodiscard]] std::size_t intersection_count(const Bitset& o) const {
    check(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  [[nodiscard]] std::size_t hash() const noexcept {
    std::string_view bytes(reinterpret_cast<const char*>(words_.data()), words_.size() * sizeof(word_type));
    return std::hash<std::string_view>{}(bytes) ^ nbits_;
  }

 private:
  void trim() noexcept {
    if (nbits_ % kWordBits && !words_.empty()) words_.back() &= (word_type{1} << (nbits_ % kWordBits)) - 1;
  }
  void check(const Bitset& o) const {
    if (o.nbits_ != nbits_) throw std::invalid_argument("bitset length mismatch");
  }

  std::size_t nbits_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

/// An index set over the elements of a group table.
using Subset = Bitset;

}  // namespace ncc
