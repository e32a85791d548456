#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _MSC_VER
#include <intrin.h>
#endif

namespace mvalg {

/// Fixed-universe bitset over element ids. Carrier sizes stay small
/// (soft limit 5000), so a word vector is plenty.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(popcount64(w));
    return c;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Lexicographic order on the word vector; used only to fix enumeration
  /// order in reports.
  friend bool operator<(const Bitset& a, const Bitset& b) { return a.words_ < b.words_; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  static int popcount64(std::uint64_t w) {
#ifdef _MSC_VER
    return static_cast<int>(__popcnt64(w));
#else
    return __builtin_popcountll(w);
#endif
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mvalg
