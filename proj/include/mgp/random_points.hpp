#pragma once

#include <cstdint>
#include <cstddef>

#include "mgp/points.hpp"

namespace mgp {

// Seeded random configuration: count distinct points of (P^1)^arity with
// coordinates [1:c], c in {0..pool-1}; with allow_infinity, [0:1] joins the
// pool. The seed fully determines the output.
struct RandomConfig {
  std::size_t arity = 3;
  std::size_t count = 1;
  std::size_t pool = 3;
  std::uint64_t seed = 0;
  bool allow_infinity = false;
};

// Rejection-samples to distinctness. Throws std::invalid_argument when the
// request is unsatisfiable (count exceeds the number of available points)
// or parameters are out of range.
PointSet random_point_set(const RandomConfig& config);

}  // namespace mgp
