#include "mgp/lines.hpp"

#include <doctest.h>

#include <map>
#include <random>

#include "mgp/examples.hpp"
#include "mgp/random_points.hpp"
#include "test_util.hpp"

using namespace mgp;
using mgp::test::collinear_set;
using mgp::test::throws_with;

namespace {

LineKey line_fixing_ones(std::size_t arity, std::size_t free_axis) {
  std::vector<ProjCoordinate> fixed(arity - 1, canonicalize(Rat(1), Rat(1)));
  return LineKey{free_axis, std::move(fixed)};
}

RandomConfig seeded(std::size_t arity, std::size_t count, std::size_t pool,
                    std::uint64_t seed) {
  RandomConfig c;
  c.arity = arity;
  c.count = count;
  c.pool = pool;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("geometric profiles of the bundled examples") {
  const RProfile p33 = geometric_r_profile(builtin_example("3.3"), 2);
  CHECK(p33.counts == std::map<std::size_t, std::size_t>{{1, 3}, {2, 1}, {3, 2}});

  const RProfile p35 = geometric_r_profile(builtin_example("3.5"), 2);
  CHECK(p35.counts == std::map<std::size_t, std::size_t>{{1, 2}, {2, 4}});

  const PointSet single = PointSet({make_point({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}})});
  for (std::size_t axis = 0; axis < 2; ++axis) {
    CHECK(geometric_r_profile(single, axis).counts ==
          std::map<std::size_t, std::size_t>{{1, 1}});
  }
}

TEST_CASE("hilbert profiles match the worked examples") {
  const RProfile p33 = hilbert_r_profile(builtin_example("3.3"), 2);
  CHECK(p33.counts == std::map<std::size_t, std::size_t>{{1, 3}, {2, 1}, {3, 2}});

  const RProfile p35 = hilbert_r_profile(builtin_example("3.5"), 2);
  CHECK(p35.counts == std::map<std::size_t, std::size_t>{{1, 2}, {2, 4}});

  // All s points on one line: a single line of multiplicity s.
  for (std::size_t s : {1, 3, 6}) {
    const PointSet line = collinear_set(3, 2, s);
    CHECK(hilbert_r_profile(line, 2).counts == std::map<std::size_t, std::size_t>{{s, 1}});
  }
}

TEST_CASE("the profile comes from the d-sequence 6,3,2,0") {
  const std::vector<long long> d = difference_sequence_at_corner(builtin_example("3.3"), 2, 3);
  CHECK(d == std::vector<long long>{6, 3, 2, 0});
  // 6-3, 3-2, 2-0: the three profile entries.
}

TEST_CASE("to_string renders profiles compactly") {
  const RProfile p = hilbert_r_profile(builtin_example("3.3"), 2);
  CHECK(to_string(p) == "r_1=3 r_2=1 r_3=2");
}

TEST_CASE("sum formula on worked examples") {
  const PointSet e35 = builtin_example("3.5");
  CHECK(sum_formula_check(e35, 2, 0) == std::pair<std::size_t, std::size_t>{6, 6});
  CHECK(sum_formula_check(e35, 2, 1) == std::pair<std::size_t, std::size_t>{10, 10});

  const PointSet line3 = collinear_set(3, 2, 3);
  CHECK(sum_formula_check(line3, 2, 1) == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("glue additivity on the bundled examples") {
  // 10-point example: one point lies on the line fixing [1:1], [1:1].
  for (const char* id : {"3.5", "3.3"}) {
    const PointSet x = builtin_example(id);
    const auto rows = glue_additivity_check(x, line_fixing_ones(3, 2));
    REQUIRE(rows.size() == x.size() + 1);
    for (const GlueRow& row : rows) {
      CAPTURE(id);
      CAPTURE(row.k);
      CHECK(row.whole == row.split_sum);
    }
  }
}

TEST_CASE("glue additivity on two points of distinct lines") {
  const PointSet x = PointSet({make_point({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}}),
                               make_point({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}, {Rat(1), Rat(3)}})});
  const auto rows = glue_additivity_check(x, line_through(x.points()[0], 2));
  for (const GlueRow& row : rows) {
    CHECK(row.whole == 2);
    CHECK(row.split_sum == 2);  // 1 + 1
  }
}

TEST_CASE("glue additivity validates its line") {
  const PointSet x = builtin_example("3.5");
  LineKey missing{2, {canonicalize(Rat(1), Rat(9)), canonicalize(Rat(1), Rat(9))}};
  CHECK(throws_with<std::invalid_argument>([&] { glue_additivity_check(x, missing); },
                                           "line misses X"));

  const PointSet line = collinear_set(3, 2, 4);
  const LineKey through = line_through(line.points()[0], 2);
  CHECK(throws_with<std::invalid_argument>([&] { glue_additivity_check(line, through); },
                                           "X contained in line"));

  LineKey wrong_arity{2, {canonicalize(Rat(1), Rat(1))}};
  CHECK_THROWS_AS(glue_additivity_check(x, wrong_arity), std::invalid_argument);
}

TEST_CASE("verify_theorem accepts the bundled examples on every axis") {
  for (const char* id : {"3.3", "3.5"}) {
    const TheoremReport report = verify_theorem(builtin_example(id));
    CHECK(report.all_ok());
    CHECK(report.axes.size() == 3);
    for (const AxisReport& axis : report.axes) {
      CHECK(axis.profiles_agree);
      CHECK(axis.sum_formula_ok);
      CHECK(!axis.first_mismatch_n.has_value());
    }
  }
}

TEST_CASE("verify_theorem on a 12-point set with four factors") {
  const PointSet x = random_point_set(seeded(4, 12, 3, 2026));
  const TheoremReport report = verify_theorem(x);
  CHECK(report.axes.size() == 4);
  CHECK(report.all_ok());
}

TEST_CASE("profile extraction equals geometry on random sets") {
  std::mt19937_64 rng(71);
  for (std::size_t arity : {2, 3, 4}) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t pool = 3 + rng() % 2;
      std::size_t capacity = 1;
      for (std::size_t a = 0; a < arity; ++a) {
        capacity *= pool;
      }
      const std::size_t count = 1 + rng() % std::min<std::size_t>(10, capacity);
      const PointSet x = random_point_set(seeded(arity, count, pool, rng()));
      for (std::size_t axis = 0; axis < arity; ++axis) {
        CAPTURE(arity);
        CAPTURE(axis);
        CHECK(geometric_r_profile(x, axis).counts == hilbert_r_profile(x, axis).counts);
      }
    }
  }
}

TEST_CASE("d-sequence entries count lines with more than k points") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet x = random_point_set(seeded(3, 1 + rng() % 10, 3, rng()));
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const auto d = difference_sequence_at_corner(x, axis, x.size());
      const RProfile geo = geometric_r_profile(x, axis);
      for (std::size_t k = 0; k <= x.size(); ++k) {
        long long tail = 0;
        for (const auto& [n, r] : geo.counts) {
          if (n >= k + 1) {
            tail += static_cast<long long>(r);
          }
        }
        CHECK(d[k] == tail);
      }
    }
  }
}

TEST_CASE("profiles add across a line split") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet x = random_point_set(seeded(3, 2 + rng() % 9, 3, rng()));
    const std::size_t axis = rng() % 3;
    const auto groups = group_by_line(x, axis);
    if (groups.size() < 2) {
      continue;
    }
    const LineKey& key = groups.begin()->first;
    std::vector<Point> on, off;
    for (const Point& p : x.points()) {
      (line_through(p, axis) == key ? on : off).push_back(p);
    }
    const RProfile whole = geometric_r_profile(x, axis);
    const RProfile part1 = geometric_r_profile(PointSet(off), axis);
    const RProfile part2 = geometric_r_profile(PointSet(on), axis);
    std::map<std::size_t, std::size_t> sum = part1.counts;
    for (const auto& [n, r] : part2.counts) {
      sum[n] += r;
    }
    CHECK(whole.counts == sum);
  }
}

TEST_CASE("profiles conserve points and lines") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t arity = 2 + rng() % 3;
    const PointSet x = random_point_set(seeded(arity, 1 + rng() % 10, 3, rng()));
    for (std::size_t axis = 0; axis < arity; ++axis) {
      for (const RProfile& p :
           {geometric_r_profile(x, axis), hilbert_r_profile(x, axis)}) {
        std::size_t weighted = 0;
        std::size_t lines = 0;
        for (const auto& [n, r] : p.counts) {
          CHECK(r > 0);
          weighted += n * r;
          lines += r;
        }
        CHECK(weighted == x.size());
        CHECK(lines == group_by_line(x, axis).size());
      }
    }
  }
}

TEST_CASE("profiles are invariant under per-factor coordinate changes") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet x = random_point_set(seeded(3, 3 + rng() % 7, 3, rng()));
    PointSet y = x;
    for (std::size_t a = 0; a < 3; ++a) {
      y = mgp::test::transform_factor(y, a, mgp::test::random_invertible_2x2(rng));
    }
    for (std::size_t axis = 0; axis < 3; ++axis) {
      CHECK(geometric_r_profile(x, axis).counts == geometric_r_profile(y, axis).counts);
      CHECK(hilbert_r_profile(x, axis).counts == hilbert_r_profile(y, axis).counts);
    }
  }
}

TEST_CASE("operations reject an empty or mismatched input") {
  const PointSet single = PointSet({make_point({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}})});
  CHECK_THROWS_AS(geometric_r_profile(single, 2), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_r_profile(single, 2), std::invalid_argument);
  CHECK_THROWS_AS(corner_slice_value(single, 2, 0), std::invalid_argument);
}

TEST_CASE("the check suite passes on the bundled examples") {
  for (const char* id : {"3.3", "3.5"}) {
    const auto checks = run_check_suite(builtin_example(id));
    CHECK(all_ok(checks));
    CHECK(checks.size() > 20);
  }
}

TEST_CASE("the check suite passes on collinear and single-point sets") {
  CHECK(all_ok(run_check_suite(collinear_set(3, 2, 5))));
  CHECK(all_ok(run_check_suite(collinear_set(2, 0, 4))));
  CHECK(all_ok(run_check_suite(PointSet({make_point({{Rat(1), Rat(2)}, {Rat(0), Rat(1)}})}))));
}
