#include "mgp/random_points.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace mgp {

PointSet random_point_set(const RandomConfig& config) {
  if (config.arity < 2) {
    throw std::invalid_argument("arity must be at least 2");
  }
  if (config.count < 1 || config.pool < 1) {
    throw std::invalid_argument("count and pool must be at least 1");
  }
  const std::size_t choices = config.pool + (config.allow_infinity ? 1 : 0);
  std::size_t capacity = 1;
  for (std::size_t a = 0; a < config.arity; ++a) {
    if (capacity > (static_cast<std::size_t>(-1) / choices)) {
      capacity = static_cast<std::size_t>(-1);  // saturate; any count fits
      break;
    }
    capacity *= choices;
  }
  if (config.count > capacity) {
    throw std::invalid_argument("cannot place " + std::to_string(config.count) +
                                " distinct points: only " + std::to_string(capacity) +
                                " are available");
  }

  // mt19937_64 with plain modulo keeps the stream identical across
  // platforms; uniform_int_distribution would not.
  std::mt19937_64 rng(config.seed);
  auto draw_coordinate = [&]() -> ProjCoordinate {
    const std::size_t c = static_cast<std::size_t>(rng() % choices);
    if (c < config.pool) {
      return canonicalize(Rat(1), Rat(static_cast<long>(c)));
    }
    return canonicalize(Rat(0), Rat(1));
  };

  std::set<Point> seen;
  std::vector<Point> points;
  while (points.size() < config.count) {
    Point p;
    p.coords.reserve(config.arity);
    for (std::size_t a = 0; a < config.arity; ++a) {
      p.coords.push_back(draw_coordinate());
    }
    if (seen.insert(p).second) {
      points.push_back(std::move(p));
    }
  }
  return PointSet(std::move(points));
}

}  // namespace mgp
