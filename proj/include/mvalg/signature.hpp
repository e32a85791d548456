#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvalg/algebra.hpp"

namespace mvalg {

/// Cardinality class: a finite count or countably infinite. Nothing larger
/// is representable; the countable class covers every example this layer
/// is meant to describe.
class Card {
 public:
  static Card finite(std::uint64_t v) { return Card(false, v); }
  static Card countable() { return Card(true, 0); }

  bool is_countable() const { return countable_; }
  std::uint64_t value() const {
    if (countable_) throw InvalidParameterError("countable cardinality has no finite value");
    return value_;
  }
  bool is_zero() const { return !countable_ && value_ == 0; }

  Card plus(std::uint64_t n) const {
    return countable_ ? *this : Card::finite(value_ + n);
  }

  friend bool operator==(const Card& a, const Card& b) {
    return a.countable_ == b.countable_ && (a.countable_ || a.value_ == b.value_);
  }
  friend bool operator!=(const Card& a, const Card& b) { return !(a == b); }

  std::string str() const { return countable_ ? "countable" : std::to_string(value_); }

 private:
  Card(bool c, std::uint64_t v) : countable_(c), value_(v) {}
  bool countable_;
  std::uint64_t value_;
};

/// Symbolic family contributing one occurrence per generated integer:
/// ALL_RANKS_FROM(k) = {k, k+1, ...} and ARITHMETIC(a, d) = {a, a+d, ...}.
/// ALL_RANKS_FROM(k) normalizes to ARITHMETIC(k, 1).
struct RankFamily {
  int first = 2;
  int step = 1;

  static RankFamily all_from(int k) { return RankFamily{k, 1}; }
  static RankFamily arithmetic(int a, int d) { return RankFamily{a, d}; }

  bool contains(std::int64_t n) const {
    return n >= first && (n - first) % step == 0;
  }
  friend bool operator==(const RankFamily& a, const RankFamily& b) {
    return a.first == b.first && a.step == b.step;
  }
  std::string str() const {
    if (step == 1) return "all_from(" + std::to_string(first) + ")";
    return "arithmetic(first=" + std::to_string(first) + ", step=" + std::to_string(step) + ")";
  }
};

/// Multiset of integers with finite-or-countable multiplicities plus an
/// optional arithmetic family (one occurrence per member). The shared
/// currency of ranks and atom orders.
struct SymbolicCounts {
  std::map<int, Card> explicit_part;
  std::optional<RankFamily> family;

  Card count(std::int64_t n) const {
    Card base = Card::finite(0);
    auto it = explicit_part.find(static_cast<int>(n));
    if (it != explicit_part.end()) base = it->second;
    if (family && family->contains(n)) base = base.plus(1);
    return base;
  }

  bool value_set_finite() const { return !family.has_value(); }
  bool empty() const { return explicit_part.empty() && !family; }

  /// Distinct values present, only meaningful when the set is finite.
  std::vector<int> distinct_values() const;

  bool equals(const SymbolicCounts& other) const;
  /// Translate all values by delta (atom order ↔ rank shifts).
  SymbolicCounts shifted(int delta, int min_value) const;

  std::string str() const;
};

/// Symbolic description of a semisimple algebra by the ranks of its maximal
/// ideals; the carrier of every infinite-example statement in the toolkit.
struct SpectralSignature {
  SymbolicCounts ranks;                        // values ≥ 2
  Card infinite_rank_count = Card::finite(0);  // maximal ideals of infinite rank
  std::optional<SymbolicCounts> atom_orders;   // values ≥ 1
  bool is_atomic = false;

  /// Describes the trivial algebra: no finite ranks, no infinite ranks.
  bool trivial() const { return ranks.empty() && infinite_rank_count.is_zero(); }

  void validate() const;  // field invariants; throws InvalidParameterError

  bool same_spectrum(const SpectralSignature& other) const {
    return ranks.equals(other.ranks) && infinite_rank_count == other.infinite_rank_count;
  }
  /// Full structural equality including atom data; used by property tests.
  bool same_description(const SpectralSignature& other) const;
};

/// Signature of a finite algebra: explicit rank and atom-order multisets.
SpectralSignature sig_of_finite_algebra(const AlgebraPtr& a);

/// Completion at signature level: drops the infinite-rank ideals, keeps the
/// finite-rank data, and derives the atom orders of the resulting product of
/// chains (one atom of order rank−1 per factor).
SpectralSignature sig_profinite(const SpectralSignature& s);

/// MacNeille completion at signature level: ∏ Ł_{o+1} over the atom orders.
SpectralSignature sig_macneille(const SpectralSignature& s);

struct SigMacCriterion {
  bool holds;
  std::string note;
};

/// Atomicity plus equality of the profinite and MacNeille rank spectra.
SigMacCriterion sig_mac_criterion(const SpectralSignature& s);

enum class CompletionVerdict { YesBounded, YesDivisibility, Unknown };

const char* completion_verdict_name(CompletionVerdict v);

struct CompletionDecision {
  CompletionVerdict verdict;
  std::optional<int> n0;               // witness rank for the divisibility route
  std::vector<int> exceptional_ranks;  // explicit ranks escaping the division
  std::string note;
};

/// Literal reading of the divisibility hypothesis ((n₀−1) | n) versus the
/// proof-consistent one ((n₀−1) | (n−1), i.e. Ł_{n₀} embeds in Ł_n).
enum class DivisibilityReading { ProofConsistent, Literal };

/// Decides whether the signature's rank set satisfies a sufficient condition
/// for being a profinite completion: bounded rank set, or a rank n₀ whose
/// predecessor divides all but finitely many (shifted) ranks. UNKNOWN is an
/// honest verdict, never a negative claim.
CompletionDecision divisibility_decision(
    const SpectralSignature& s,
    DivisibilityReading reading = DivisibilityReading::ProofConsistent);

/// The convergent-sequence subalgebra of ∏_{n≥1} Ł_{n+1}: ranks {n+1 : n≥1}
/// once each, a single infinite-rank ideal, atoms of every order n ≥ 1.
SpectralSignature builtin_example_convergent();

/// Rank-to-cardinality comparison (families normalized to their generated
/// sets), together with the infinite-rank count.
bool sig_equal(const SpectralSignature& s1, const SpectralSignature& s2);

}  // namespace mvalg
