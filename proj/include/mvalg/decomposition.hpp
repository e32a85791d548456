#pragma once

#include "mvalg/chain_multiset.hpp"
#include "mvalg/ideal.hpp"

namespace mvalg {

/// A ≅ ∏_{M maximal} A/M, the maximal-ideal route with I = {0}. The witness
/// is verified exhaustively; the multiset of quotient sizes is the canonical
/// form of the algebra.
struct CanonicalDecomposition {
  ChainMultiset multiset;
  std::vector<Ideal> factors;  // maximal ideals, sorted by (rank, members)
  AlgebraPtr product;          // ∏ A/M
  IsoWitness iso;              // A -> product
};

CanonicalDecomposition canonical_decomposition(const AlgebraPtr& a);

/// Isomorphism decided by equality of canonical chain multisets (sound and
/// complete for finite algebras); when the multisets match, an explicit
/// witness is assembled by matching factors of equal rank.
std::optional<IsoWitness> is_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b);

/// Carrier of a chain quotient sorted by the algebra order (least first).
std::vector<ElementId> sorted_chain(const FiniteMvAlgebra& chain);

}  // namespace mvalg
