#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mvalg/bitset.hpp"
#include "mvalg/errors.hpp"

namespace mvalg {

/// Finite partial order, validated at construction (reflexive, antisymmetric,
/// transitive) with a witness in the error message otherwise.
class FinitePoset {
 public:
  static FinitePoset create(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le);

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }

  /// {y : y ≤ x}
  Bitset downset(std::size_t x) const;
  /// {y : x ≤ y}
  const Bitset& upset(std::size_t x) const { return up_[x]; }

 private:
  FinitePoset() = default;
  std::size_t n_ = 0;
  std::vector<Bitset> up_;  // up_[x] = {y : x ≤ y}
};

/// Dedekind–MacNeille completion by cut closure: the lattice of all sets of
/// the form down(up(S)), ordered by inclusion, with x ↦ ↓x as the embedding.
/// Construction verifies: every cut is closed, the embedding is an
/// order-embedding, its image is join-dense and meet-dense, and the cut
/// family is a complete lattice (top, bottom, all pairwise meets and joins).
struct DmCompletion {
  std::vector<Bitset> cuts;            // sorted by (size, lex)
  std::vector<std::size_t> embedding;  // poset element -> cut index of ↓x
  std::vector<std::string> diagnostics;

  std::size_t size() const { return cuts.size(); }
  bool leq(std::size_t i, std::size_t j) const { return cuts[i].subset_of(cuts[j]); }
  FinitePoset lattice() const;
};

DmCompletion dedekind_macneille(const FinitePoset& p);

}  // namespace mvalg
