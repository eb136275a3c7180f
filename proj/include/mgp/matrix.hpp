#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mgp/rational.hpp"

namespace mgp {

// Dense row-major matrix of exact rationals. Immutable once built; rank
// computations on distinct matrices can run concurrently.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

// Rank over the rationals, computed by fraction-free Bareiss elimination
// after clearing denominators row by row (row scaling preserves rank).
// Deterministic: pivots are the first nonzero entry in each column.
std::size_t rank(const ExactMatrix& m);

// Rank of the reduction mod a prime p. Always <= rank(m); strict when a
// pivot minor happens to vanish mod p, so this is only a fast filter.
// Throws std::domain_error("bad prime ...") if some denominator is 0 mod p.
std::size_t rank_mod_p(const ExactMatrix& m, std::int64_t p);

}  // namespace mgp
