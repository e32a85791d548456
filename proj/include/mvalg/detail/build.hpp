#pragma once

#include "mvalg/algebra.hpp"

namespace mvalg::detail {

enum class BuildMode {
  Exhaustive,  // full axiom scan, any size
  Structural,  // cubic associativity scan only up to the internal limit;
               // used for constructions that inherit the equations
               // (products of validated factors, quotient images, subalgebras)
};

AlgebraPtr build_algebra(AlgebraTables tables, Provenance provenance,
                         std::vector<std::vector<Fraction>> coords,
                         std::vector<std::size_t> factor_sizes, BuildMode mode,
                         const Limits& limits = default_limits());

}  // namespace mvalg::detail
