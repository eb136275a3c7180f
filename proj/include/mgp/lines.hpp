#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgp/hilbert.hpp"
#include "mgp/points.hpp"

namespace mgp {

// Line-multiplicity profile for one line type: counts[n] is the number of
// lines with the given free axis containing exactly n points of X. Absent
// keys mean zero; stored counts are positive.
struct RProfile {
  std::size_t free_axis;
  std::map<std::size_t, std::size_t> counts;

  friend bool operator==(const RProfile&, const RProfile&) = default;
};

std::string to_string(const RProfile& p);  // "r_1=3 r_2=1 r_3=2"

// H_X at the degree whose entry is t_a - 1 on every axis a != free_axis and
// k on the free axis; k < 0 gives 0. This is the sequence the whole profile
// extraction reads from.
std::size_t corner_slice_value(const PointSet& x, std::size_t free_axis, int k);

// d_{T,k} = H(T,k) - H(T,k-1) for k = 0..k_max, T as above.
std::vector<long long> difference_sequence_at_corner(const PointSet& x, std::size_t free_axis,
                                                     std::size_t k_max);

// Histogram of group sizes of group_by_line: the profile read off the
// geometry directly. The independent side of every cross-check below.
RProfile geometric_r_profile(const PointSet& x, std::size_t free_axis);

// Profile recovered from the Hilbert function alone:
//   r_{k+1} = 2 H(T,k) - H(T,k-1) - H(T,k+1)
// for k = 0..k_max. Throws std::logic_error if a second difference comes
// out negative, which the theory rules out. k_max >= |X| captures every
// nonzero multiplicity; that is the default used by callers.
RProfile hilbert_r_profile(const PointSet& x, std::size_t free_axis, std::size_t k_max);
RProfile hilbert_r_profile(const PointSet& x, std::size_t free_axis);

// lhs = H(T, k); rhs = sum_n min(n, k+1) * r_n over the geometric profile.
// The two agree for every k.
std::pair<std::size_t, std::size_t> sum_formula_check(const PointSet& x, std::size_t free_axis,
                                                      std::size_t k);

// One row of the line-splitting identity H_X(T,k) = H_X1(T,k) + H_X2(T,k),
// where X2 is the part of X on a line and X1 the rest, all evaluated at the
// full set's corner T.
struct GlueRow {
  std::size_t k;
  std::size_t whole;      // H_X(T, k)
  std::size_t split_sum;  // H_X1(T, k) + H_X2(T, k)
};

// Rows for k = 0..|X|. Preconditions: the line meets X ("line misses X"
// otherwise) and X is not contained in it ("X contained in line").
std::vector<GlueRow> glue_additivity_check(const PointSet& x, const LineKey& line);

// Per-axis comparison of the two profile routes, plus the sum formula at
// every k = 0..|X|. Discrepancies are reported, not thrown: equality is a
// theorem, so a mismatch means an implementation bug.
struct AxisReport {
  std::size_t free_axis;
  RProfile geometric;
  RProfile from_hilbert;
  std::vector<long long> d_sequence;  // d_{T,k} for k = 0..|X|+1
  bool profiles_agree;
  std::optional<std::size_t> first_mismatch_n;
  bool sum_formula_ok;
  std::optional<std::size_t> sum_formula_first_bad_k;

  bool ok() const { return profiles_agree && sum_formula_ok; }
};

struct TheoremReport {
  std::vector<AxisReport> axes;

  bool all_ok() const;
};

AxisReport axis_report(const PointSet& x, std::size_t free_axis);

TheoremReport verify_theorem(const PointSet& x);

// One named check of the invariant suite; detail names the witness degree
// on failure.
struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

// The full invariant suite on one input set: profile agreement and the sum
// formula per axis, difference-sequence tail counts and monotonicity,
// conservation, corner stabilization, axis slices, line-split additivity,
// and the single-line closed form when X lies on one line.
std::vector<CheckResult> run_check_suite(const PointSet& x);

bool all_ok(const std::vector<CheckResult>& checks);

}  // namespace mgp
