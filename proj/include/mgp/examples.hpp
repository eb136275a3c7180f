#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgp/points.hpp"

namespace mgp {

// Bundled sample configurations, addressable from the CLI as --example ID.
// "3.3": 11 points of (P^1)^3 with three distinct coordinates per axis.
// "3.5": 10 points of (P^1)^3 with t = (2, 3, 3).
PointSet builtin_example(std::string_view id);

std::vector<std::string> builtin_example_ids();

}  // namespace mgp
