#pragma once

#include <cstddef>
#include <vector>

#include "mgp/matrix.hpp"
#include "mgp/points.hpp"

namespace mgp {

// A multidegree (d_1, ..., d_r). Components may go negative in intermediate
// formulas; any Hilbert value at a degree with a negative component is 0.
struct MultiDegree {
  std::vector<int> parts;

  std::size_t arity() const { return parts.size(); }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

// Componentwise partial order: a dominates b iff a_i >= b_i for all i.
bool dominates(const MultiDegree& a, const MultiDegree& b);

// All degrees d with 0 <= d <= upper componentwise.
struct DegreeBox {
  MultiDegree upper;

  std::size_t cell_count() const;
};

// dim of the degree-d graded piece of the ambient ring: prod (d_a + 1).
std::size_t ring_dimension(const MultiDegree& d);

// Exponent tuples (e_1, ..., e_r), 0 <= e_a <= d_a, in ascending
// lexicographic order; tuple e stands for the monomial
// prod_a u_a^{e_a} v_a^{d_a - e_a}.
std::vector<std::vector<int>> monomial_exponents(const MultiDegree& d);

// |X| rows, ring_dimension(d) columns; entry (p, m) is monomial m evaluated
// at the canonical representative of point p. Degree-d forms vanishing on X
// are exactly the kernel, so the rank of this matrix is H_X(d).
ExactMatrix evaluation_matrix(const PointSet& x, const MultiDegree& d);

// H_X(d): rank of the evaluation matrix; 0 when X is empty or any component
// of d is negative.
std::size_t hilbert_value(const PointSet& x, const MultiDegree& d);

// H_X over a degree box, with the projection counts recorded so readers can
// extend values past the stabilization corner.
class HilbertTable {
 public:
  HilbertTable(DegreeBox box, std::vector<std::size_t> values, std::size_t point_count,
               std::vector<std::size_t> projection_counts);

  const DegreeBox& box() const { return box_; }
  std::size_t point_count() const { return point_count_; }
  const std::vector<std::size_t>& projection_counts() const { return projection_counts_; }
  const std::vector<std::size_t>& values() const { return values_; }

  std::size_t at(const MultiDegree& d) const;

 private:
  DegreeBox box_;
  std::vector<std::size_t> values_;  // dense, mixed radix, axis 0 most significant
  std::size_t point_count_;
  std::vector<std::size_t> projection_counts_;
};

HilbertTable hilbert_table(const PointSet& x, const DegreeBox& box);

// (t_1 - 1, ..., t_r - 1); H_X is constant beyond this corner in every axis
// direction. Throws std::invalid_argument on an empty set.
MultiDegree stabilization_corner(const PointSet& x);

// First differences of H_X along one axis at fixed values on the others,
// with H at free index -1 taken as 0.
struct DifferenceSequence {
  std::vector<int> fixed;  // degrees on the other axes, in axis order
  std::size_t free_axis;
  std::vector<long long> values;  // d_0 ... d_{k_max}
};

DifferenceSequence difference_sequence(const PointSet& x, const std::vector<int>& fixed,
                                       std::size_t free_axis, std::size_t k_max);

// Hilbert value of s points on a single line: min(k + 1, s), any (i, j).
std::size_t collinear_closed_form(std::size_t s, std::size_t k);

}  // namespace mgp
