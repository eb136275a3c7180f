#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mgp/hilbert.hpp"
#include "mgp/matrix.hpp"
#include "mgp/points.hpp"

namespace mgp::test {

// True iff f() throws an E whose message contains needle.
template <typename E, typename F>
bool throws_with(F&& f, std::string_view needle) {
  try {
    f();
  } catch (const E& e) {
    return std::string_view(e.what()).find(needle) != std::string_view::npos;
  } catch (...) {
    return false;
  }
  return false;
}

// Independent rank oracle: plain Gauss-Jordan over mpq with full row
// normalization. Deliberately shares nothing with the Bareiss path it
// cross-checks.
inline std::size_t naive_rank(const ExactMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m.at(r, c);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    std::swap(a[pivot], a[rank]);
    const Rat inv = 1 / a[rank][c];
    for (std::size_t j = c; j < m.cols(); ++j) {
      a[rank][j] *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != rank && a[i][c] != 0) {
        const Rat f = a[i][c];
        for (std::size_t j = c; j < m.cols(); ++j) {
          a[i][j] -= f * a[rank][j];
        }
      }
    }
    ++rank;
  }
  return rank;
}

// Deterministic integer matrix with entries in [lo, hi].
inline ExactMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     int lo, int hi) {
  ExactMatrix m(rows, cols);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = Rat(lo + static_cast<int>(rng() % span));
    }
  }
  return m;
}

// Invertible 2x2 rational matrix, entries from a small pool.
inline std::array<Rat, 4> random_invertible_2x2(std::mt19937_64& rng) {
  while (true) {
    std::array<Rat, 4> m;
    for (Rat& e : m) {
      const int num = static_cast<int>(rng() % 7) - 3;
      const int den = 1 + static_cast<int>(rng() % 3);
      e = make_rat(num, den);
    }
    if (m[0] * m[3] - m[1] * m[2] != 0) {
      return m;
    }
  }
}

// Applies an invertible coordinate change on one factor of every point.
inline PointSet transform_factor(const PointSet& x, std::size_t axis,
                                 const std::array<Rat, 4>& m) {
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (const Point& p : x.points()) {
    Point q = p;
    const Rat u = p.coords[axis].u;
    const Rat v = p.coords[axis].v;
    q.coords[axis] = canonicalize(m[0] * u + m[1] * v, m[2] * u + m[3] * v);
    pts.push_back(std::move(q));
  }
  return PointSet(std::move(pts));
}

// Reorders the factors of every point.
inline PointSet permute_factors(const PointSet& x, const std::vector<std::size_t>& perm) {
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (const Point& p : x.points()) {
    Point q;
    q.coords.resize(p.arity());
    for (std::size_t a = 0; a < p.arity(); ++a) {
      q.coords[perm[a]] = p.coords[a];
    }
    pts.push_back(std::move(q));
  }
  return PointSet(std::move(pts));
}

// s points on the single line with the given fixed coordinates: the free
// coordinate runs through [1:0], [1:1], ..., [1:s-1].
inline PointSet collinear_set(std::size_t arity, std::size_t free_axis, std::size_t s) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < s; ++i) {
    Point p;
    for (std::size_t a = 0; a < arity; ++a) {
      p.coords.push_back(a == free_axis ? canonicalize(Rat(1), Rat(static_cast<long>(i)))
                                        : canonicalize(Rat(1), Rat(2)));
    }
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

}  // namespace mgp::test
