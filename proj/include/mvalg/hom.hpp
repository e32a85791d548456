#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvalg/algebra.hpp"

namespace mvalg {

/// Explicit element map between two algebras. Preservation is never trusted
/// from construction; `check` runs the exhaustive definition.
struct Homomorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<ElementId> map;  // indexed by source element id

  ElementId operator()(ElementId x) const { return map[x]; }

  /// Description of the first violated preservation equation, or absent.
  std::optional<std::string> check() const;
  /// Throws InternalCheckError when check() finds a violation.
  void require_valid(const std::string& context) const;

  bool is_injective() const;
  bool is_surjective() const;
};

/// A homomorphism together with its verified inverse; every "≅" produced by
/// the toolkit is returned as one of these.
struct IsoWitness {
  Homomorphism forward;
  Homomorphism inverse;

  std::optional<std::string> check() const;
  void require_valid(const std::string& context) const;
};

/// Builds the witness from a forward map that is verified to be a bijective
/// homomorphism; absent when the map is not bijective.
std::optional<IsoWitness> iso_from_bijection(Homomorphism forward);

/// Same, but the caller asserts bijectivity must hold; throws
/// InternalCheckError otherwise.
IsoWitness iso_from_bijection_checked(Homomorphism forward, const std::string& context);

Homomorphism compose(const Homomorphism& first, const Homomorphism& then);

}  // namespace mvalg
