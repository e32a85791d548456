#pragma once

#include <cstddef>

namespace mvalg {

/// Size guards for exhaustive algorithms. Everything in this toolkit is
/// quadratic or cubic in the carrier, so constructors refuse oversized
/// inputs unless the caller raises the limit explicitly.
struct Limits {
  std::size_t max_carrier = 5000;
  std::size_t max_ideal_count = 100000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace mvalg
