#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace mvalg {

/// Multiset of chain sizes n ≥ 2: the canonical form of a finite MV-algebra.
/// Empty exactly for the trivial algebra.
struct ChainMultiset {
  std::map<int, int> counts;  // chain size -> multiplicity

  void add(int n, int times = 1) { counts[n] += times; }

  bool empty() const { return counts.empty(); }

  std::size_t total_entries() const {
    std::size_t t = 0;
    for (const auto& [n, c] : counts) t += static_cast<std::size_t>(c);
    return t;
  }

  /// Product of all entries with multiplicity; 1 for the empty multiset.
  /// Equals the carrier size of the algebra this multiset describes.
  std::size_t carrier_size() const {
    std::size_t p = 1;
    for (const auto& [n, c] : counts)
      for (int i = 0; i < c; ++i) p *= static_cast<std::size_t>(n);
    return p;
  }

  std::vector<int> sorted_entries() const {
    std::vector<int> out;
    for (const auto& [n, c] : counts)
      for (int i = 0; i < c; ++i) out.push_back(n);
    return out;
  }

  friend bool operator==(const ChainMultiset& a, const ChainMultiset& b) {
    return a.counts == b.counts;
  }
  friend bool operator!=(const ChainMultiset& a, const ChainMultiset& b) { return !(a == b); }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int n : sorted_entries()) {
      if (!first) s += ",";
      s += std::to_string(n);
      first = false;
    }
    return s + "}";
  }
};

}  // namespace mvalg
