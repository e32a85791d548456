#pragma once

#include "mvalg/hom.hpp"

namespace mvalg {

/// Boolean center: the subalgebra of idempotents, with its inclusion map.
struct CenterResult {
  AlgebraPtr algebra;       // the center as an algebra of its own
  Homomorphism embedding;   // center -> parent, the inclusion
};

/// Membership test is x⊕x = x; the result is checked to be closed under the
/// operations and to be a Boolean algebra (x∨¬x = 1, x∧¬x = 0).
CenterResult boolean_center(const AlgebraPtr& a);

}  // namespace mvalg
