#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgp/rational.hpp"

namespace mgp {

// Syntax error in a point file, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// One homogeneous pair [u:v] on a projective-line factor, kept in canonical
// form: u = 1 when u != 0, otherwise (u, v) = (0, 1). Equality of canonical
// forms is equality of the underlying projective points.
struct ProjCoordinate {
  Rat u;
  Rat v;

  friend bool operator==(const ProjCoordinate&, const ProjCoordinate&) = default;
};

bool operator<(const ProjCoordinate& a, const ProjCoordinate& b);

// Unique scalar multiple of [u:v] with leading nonzero entry 1.
// Throws std::invalid_argument("zero coordinate") on (0, 0).
ProjCoordinate canonicalize(const Rat& u, const Rat& v);

// A point of (P^1)^r as r canonicalized coordinate pairs, r >= 2.
struct Point {
  std::vector<ProjCoordinate> coords;

  std::size_t arity() const { return coords.size(); }

  friend bool operator==(const Point&, const Point&) = default;
};

bool operator<(const Point& a, const Point& b);

// Convenience constructor from raw pairs; canonicalizes every factor.
Point make_point(const std::vector<std::pair<Rat, Rat>>& raw);

// A validated set of distinct points sharing one arity.
class PointSet {
 public:
  // Validates arity >= 2, uniform arity, and pairwise distinctness.
  // Duplicates are a hard error naming the offending pair.
  explicit PointSet(std::vector<Point> points);

  // Empty set of the given arity (parsing never produces one, but the
  // Hilbert machinery is total on it).
  static PointSet empty(std::size_t arity);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t arity() const { return arity_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  PointSet(std::vector<Point> points, std::size_t arity)
      : points_(std::move(points)), arity_(arity) {}

  std::vector<Point> points_;
  std::size_t arity_;
};

enum class PointFormat { kPlain, kJson };

// Plain format: one point per line, factors separated by '|', each factor
// "u:v" with u, v integers or fractions "p/q"; blank lines and '#' comments
// ignored. JSON format: array of points, each an array of r two-element
// arrays of strings. Throws ParseError on syntax errors and
// std::invalid_argument on duplicate points or mixed arity.
PointSet parse_point_set(std::istream& in, PointFormat format);
PointSet parse_point_set(const std::string& text, PointFormat format);

// Plain-format serialization; parse(serialize(x)) == x.
std::string to_plain_text(const PointSet& x);
std::string to_plain_text(const Point& p);

// Number of distinct canonical coordinates on the given axis (t_a).
std::size_t projection_count(const PointSet& x, std::size_t axis);

// Identifies one line with the given free axis: the r-1 fixed coordinates
// on the other axes, in axis order.
struct LineKey {
  std::size_t free_axis;
  std::vector<ProjCoordinate> fixed_coords;

  friend bool operator==(const LineKey&, const LineKey&) = default;
};

bool operator<(const LineKey& a, const LineKey& b);

// Partitions X by the coordinates on all axes except free_axis. Only the
// nonempty groups appear, i.e. exactly the lines of this type meeting X.
std::map<LineKey, PointSet> group_by_line(const PointSet& x, std::size_t free_axis);

// The fixed part of the line through p with the given free axis.
LineKey line_through(const Point& p, std::size_t free_axis);

}  // namespace mgp
