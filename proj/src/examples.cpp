#include "mgp/examples.hpp"

#include <array>
#include <stdexcept>

namespace mgp {

namespace {

// Index triples (i, j, k) standing for [1:i] x [1:j] x [1:k].
PointSet from_index_triples(const std::vector<std::array<int, 3>>& triples) {
  std::vector<Point> points;
  points.reserve(triples.size());
  for (const auto& [i, j, k] : triples) {
    points.push_back(make_point({{Rat(1), Rat(i)}, {Rat(1), Rat(j)}, {Rat(1), Rat(k)}}));
  }
  return PointSet(std::move(points));
}

}  // namespace

PointSet builtin_example(std::string_view id) {
  if (id == "3.3") {
    return from_index_triples({{1, 1, 1},
                               {1, 1, 2},
                               {1, 1, 3},
                               {1, 2, 1},
                               {1, 2, 2},
                               {1, 2, 3},
                               {2, 1, 2},
                               {2, 1, 1},
                               {3, 1, 1},
                               {2, 2, 1},
                               {1, 3, 1}});
  }
  if (id == "3.5") {
    return from_index_triples({{1, 1, 1},
                               {1, 2, 1},
                               {1, 2, 2},
                               {1, 3, 2},
                               {1, 3, 3},
                               {2, 1, 1},
                               {2, 2, 1},
                               {2, 2, 2},
                               {2, 3, 2},
                               {2, 3, 3}});
  }
  throw std::invalid_argument("unknown builtin example '" + std::string(id) +
                              "'; available: 3.3, 3.5");
}

std::vector<std::string> builtin_example_ids() { return {"3.3", "3.5"}; }

}  // namespace mgp
