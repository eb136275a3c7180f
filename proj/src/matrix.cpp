#include "mgp/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace mgp {

namespace {

// Scales each row by the lcm of its denominators, giving an integer matrix
// with the same rank.
std::vector<Int> clear_denominators(const ExactMatrix& m) {
  std::vector<Int> out(m.rows() * m.cols());
  Int scale;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      Int& e = out[r * m.cols() + c];
      mpz_divexact(e.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
      e *= v.get_num();
    }
  }
  return out;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) {
      acc = static_cast<std::int64_t>(static_cast<__int128>(acc) * base % p);
    }
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) {
    return 0;
  }
  std::vector<Int> a = clear_denominators(m);
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };

  // One-step Bareiss. After eliminating with pivots in columns
  // c_1 < ... < c_t, entry (i,j) is +/- the (t+1)-minor on the pivot rows,
  // row i and columns {c_1..c_t, j}, so dividing by the previous pivot is
  // an exact integer division even when columns are skipped.
  Int prev(1);
  Int t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) {
        std::swap(at(pivot, j), at(r, j));
      }
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const ExactMatrix& m, std::int64_t p) {
  if (p < 2) {
    throw std::domain_error("bad prime: p must be >= 2");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) {
    return 0;
  }
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Rat& v = m.at(r, c);
      const std::int64_t num = static_cast<std::int64_t>(mpz_fdiv_ui(v.get_num_mpz_t(), p));
      const std::int64_t den = static_cast<std::int64_t>(mpz_fdiv_ui(v.get_den_mpz_t(), p));
      if (den == 0) {
        throw std::domain_error("bad prime: a denominator vanishes mod p");
      }
      a[r * cols + c] = static_cast<std::int64_t>(
          static_cast<__int128>(num) * mod_pow(den, p - 2, p) % p);
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) {
        std::swap(at(pivot, j), at(r, j));
      }
    }
    const std::int64_t inv = mod_pow(at(r, c), p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) {
        continue;
      }
      const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(at(i, c)) * inv % p);
      for (std::size_t j = c; j < cols; ++j) {
        at(i, j) = static_cast<std::int64_t>(
            ((at(i, j) - static_cast<__int128>(f) * at(r, j)) % p + p) % p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace mgp
