#pragma once

#include <map>
#include <optional>
#include <utility>

#include "mvalg/center.hpp"
#include "mvalg/decomposition.hpp"
#include "mvalg/ideal.hpp"
#include "mvalg/poset.hpp"

namespace mvalg {

enum class CompletionMethod { InverseLimit, MaxfProduct, Macneille };

const char* completion_method_name(CompletionMethod m);

struct CompletionReport {
  CompletionMethod method;
  ChainMultiset multiset;
  std::optional<IsoWitness> witness;  // method-specific, see each operation
  std::vector<std::string> diagnostics;
};

/// The inverse system {(id_f(A), ⊇), {A/I}, {φ_JI}}. Transition maps exist
/// for every pair I ⊆ J; identity and composition coherence are checked at
/// construction.
class InverseSystem {
 public:
  struct Node {
    Ideal ideal;
    Quotient quotient;
  };

  static InverseSystem build(const AlgebraPtr& a, const Limits& limits);
  static InverseSystem build(const AlgebraPtr& a) { return build(a, a->limits()); }

  const AlgebraPtr& base() const { return base_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool le(std::size_t i, std::size_t j) const;  // ideals[i] ⊆ ideals[j]
  /// Class map A/I_i -> A/I_j; null when not comparable.
  const std::vector<ElementId>* transition(std::size_t i, std::size_t j) const;

 private:
  AlgebraPtr base_;
  std::vector<Node> nodes_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ElementId>> transitions_;
};

struct InverseLimitResult {
  AlgebraPtr algebra;
  /// Per limit element, the compatible tuple of class ids, indexed like the
  /// system nodes.
  std::vector<std::vector<ElementId>> tuples;
  CompletionReport report;
};

/// Compatible-tuple algebra of the inverse system. Tuples are forced by
/// their coordinate at the least ideal {0}; the construction enumerates
/// those extensions and asserts compatibility, determinacy and the count.
InverseLimitResult inverse_limit_profinite(const AlgebraPtr& a, const Limits& limits);
inline InverseLimitResult inverse_limit_profinite(const AlgebraPtr& a) {
  return inverse_limit_profinite(a, a->limits());
}

struct ProfiniteProductResult {
  AlgebraPtr algebra;              // ∏_{M ∈ Max_f(A)} A/M
  std::vector<Ideal> factors;      // sorted by (rank, members)
  std::vector<Quotient> quotients; // aligned with factors
  CompletionReport report;
};

ProfiniteProductResult profinite_product(const AlgebraPtr& a, const Limits& limits);
inline ProfiniteProductResult profinite_product(const AlgebraPtr& a) {
  return profinite_product(a, a->limits());
}

/// Verified isomorphism between the inverse-limit algebra and the Max_f
/// product, built by dropping the coordinates at non-maximal ideals.
/// A failure here is a build-stopping bug, not a data error.
IsoWitness verify_main_theorem(const AlgebraPtr& a, const Limits& limits);
inline IsoWitness verify_main_theorem(const AlgebraPtr& a) {
  return verify_main_theorem(a, a->limits());
}

struct SelfIsoEvidence {
  bool holds;
  IsoWitness witness;  // A ≅ Â
  std::vector<std::pair<Ideal, ElementId>> principal_generators;  // per maximal ideal
};

/// A ≅ Â together with a principal generator for every maximal ideal; both
/// sides of the biconditional are computed and asserted to agree.
SelfIsoEvidence check_self_iso(const AlgebraPtr& a);

struct RegularityReport {
  bool regular;
  CenterResult center;
  struct Entry {
    Ideal center_prime;   // prime ideal N of B(A)
    Ideal generated;      // ideal of A generated by N
    bool generated_prime;
  };
  std::vector<Entry> entries;
};

/// Every prime of the Boolean center must generate a prime of A.
RegularityReport is_regular(const AlgebraPtr& a);

struct CenterPreservation {
  AlgebraPtr center_of_completion;  // B(Â)
  AlgebraPtr completion_of_center;  // B(A)^
  IsoWitness witness;
};

/// Requires a regular algebra; the violating center prime is named otherwise.
CenterPreservation check_boolean_center_preservation(const AlgebraPtr& a);

struct ProductPreservation {
  AlgebraPtr product;      // A1 × A2
  ChainMultiset multiset;  // of (A1×A2)^
  IsoWitness witness;      // (A1×A2)^ ≅ Â1 × Â2
};

/// Also checks the maximal-ideal bookkeeping: maximal ideals of A1×A2 are
/// exactly the M1×A2 and A1×M2.
ProductPreservation check_product_preservation(const AlgebraPtr& a1, const AlgebraPtr& a2,
                                               const Limits& limits);
/// Without explicit limits, the looser of the two subjects' limits applies.
ProductPreservation check_product_preservation(const AlgebraPtr& a1, const AlgebraPtr& a2);

struct MacneilleResult {
  AlgebraPtr algebra;  // ∏_{a ∈ atoms} Ł_{|a|+1}
  CompletionReport report;  // witness: A ≅ Ā
};

/// MacNeille completion of a semisimple atomic algebra, by the atom-order
/// product formula, cross-checked against the lattice-level cut completion
/// of the algebra's order.
MacneilleResult macneille_mv(const AlgebraPtr& a, const Limits& limits);
inline MacneilleResult macneille_mv(const AlgebraPtr& a) { return macneille_mv(a, a->limits()); }

struct MacCriterionResult {
  bool holds;
  /// Rank-respecting bijection atom ↦ maximal ideal when the criterion holds.
  std::vector<std::pair<ElementId, Ideal>> tau;
  std::optional<IsoWitness> completion_iso;  // Â ≅ Ā
  std::string note;
};

/// Atomicity plus equality of the multisets {|a|+1 : a atom} and
/// {rank(M) : M maximal}.
MacCriterionResult check_mac_criterion(const AlgebraPtr& a);

struct PowersetWitness {
  AlgebraPtr powerset;         // P(Max(B)) as an algebra
  AlgebraPtr completion;       // B^
  std::vector<Ideal> points;   // the maximal ideals, in label order
  IsoWitness witness;          // completion ≅ powerset
};

/// For Boolean B: B^ ≅ P(X) with X the (finite) set of maximal ideals.
PowersetWitness boolean_profinite_powerset(const AlgebraPtr& b, const Limits& limits);
inline PowersetWitness boolean_profinite_powerset(const AlgebraPtr& b) {
  return boolean_profinite_powerset(b, b->limits());
}

/// The algebra's lattice order as a poset, for MacNeille-side checks.
FinitePoset order_poset(const FiniteMvAlgebra& a);

}  // namespace mvalg
