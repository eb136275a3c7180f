#include "mgp/hilbert.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace mgp {

namespace {

void check_arity(const PointSet& x, const MultiDegree& d) {
  if (d.arity() != x.arity()) {
    throw std::invalid_argument("degree arity " + std::to_string(d.arity()) +
                                " does not match point arity " + std::to_string(x.arity()));
  }
}

}  // namespace

bool dominates(const MultiDegree& a, const MultiDegree& b) {
  if (a.arity() != b.arity()) {
    throw std::invalid_argument("cannot compare degrees of different arity");
  }
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i] < b.parts[i]) {
      return false;
    }
  }
  return true;
}

std::size_t DegreeBox::cell_count() const {
  std::size_t n = 1;
  for (int p : upper.parts) {
    if (p < 0) {
      throw std::invalid_argument("degree box upper corner must be nonnegative");
    }
    n *= static_cast<std::size_t>(p) + 1;
  }
  return n;
}

std::size_t ring_dimension(const MultiDegree& d) {
  std::size_t n = 1;
  for (int p : d.parts) {
    if (p < 0) {
      return 0;
    }
    n *= static_cast<std::size_t>(p) + 1;
  }
  return n;
}

std::vector<std::vector<int>> monomial_exponents(const MultiDegree& d) {
  const std::size_t r = d.arity();
  std::vector<std::vector<int>> out;
  if (ring_dimension(d) == 0) {
    return out;
  }
  out.reserve(ring_dimension(d));
  std::vector<int> e(r, 0);
  while (true) {
    out.push_back(e);
    // next tuple in lexicographic order: odometer with axis 0 most significant
    std::size_t a = r;
    while (a > 0) {
      --a;
      if (e[a] < d.parts[a]) {
        ++e[a];
        break;
      }
      e[a] = 0;
      if (a == 0) {
        return out;
      }
    }
  }
}

ExactMatrix evaluation_matrix(const PointSet& x, const MultiDegree& d) {
  check_arity(x, d);
  const auto exponents = monomial_exponents(d);
  ExactMatrix m(x.size(), exponents.size());
  if (exponents.empty()) {
    return m;
  }
  for (std::size_t p = 0; p < x.size(); ++p) {
    const Point& point = x.points()[p];
    // Per-axis power tables keep this to O(cols * r) small multiplications.
    std::vector<std::vector<Rat>> u_pow(d.arity()), v_pow(d.arity());
    for (std::size_t a = 0; a < d.arity(); ++a) {
      const int da = d.parts[a];
      u_pow[a].resize(da + 1);
      v_pow[a].resize(da + 1);
      for (int e = 0; e <= da; ++e) {
        u_pow[a][e] = rat_pow(point.coords[a].u, e);
        v_pow[a][e] = rat_pow(point.coords[a].v, e);
      }
    }
    for (std::size_t c = 0; c < exponents.size(); ++c) {
      Rat value(1);
      for (std::size_t a = 0; a < d.arity(); ++a) {
        const int e = exponents[c][a];
        value *= u_pow[a][e];
        value *= v_pow[a][d.parts[a] - e];
      }
      m.at(p, c) = std::move(value);
    }
  }
  return m;
}

std::size_t hilbert_value(const PointSet& x, const MultiDegree& d) {
  check_arity(x, d);
  if (x.size() == 0) {
    return 0;
  }
  for (int p : d.parts) {
    if (p < 0) {
      return 0;
    }
  }
  return rank(evaluation_matrix(x, d));
}

HilbertTable::HilbertTable(DegreeBox box, std::vector<std::size_t> values,
                           std::size_t point_count, std::vector<std::size_t> projection_counts)
    : box_(std::move(box)),
      values_(std::move(values)),
      point_count_(point_count),
      projection_counts_(std::move(projection_counts)) {
  if (values_.size() != box_.cell_count()) {
    throw std::invalid_argument("table size does not match box");
  }
}

std::size_t HilbertTable::at(const MultiDegree& d) const {
  if (d.arity() != box_.upper.arity()) {
    throw std::invalid_argument("degree arity does not match table");
  }
  std::size_t idx = 0;
  for (std::size_t a = 0; a < d.arity(); ++a) {
    const int p = d.parts[a];
    if (p < 0 || p > box_.upper.parts[a]) {
      throw std::out_of_range("degree outside table box");
    }
    idx = idx * (static_cast<std::size_t>(box_.upper.parts[a]) + 1) + static_cast<std::size_t>(p);
  }
  return values_[idx];
}

HilbertTable hilbert_table(const PointSet& x, const DegreeBox& box) {
  if (box.upper.arity() != x.arity()) {
    throw std::invalid_argument("box arity does not match point arity");
  }
  const std::size_t cells = box.cell_count();
  std::vector<std::size_t> values(cells);
  MultiDegree d{std::vector<int>(x.arity(), 0)};
  for (std::size_t idx = 0; idx < cells; ++idx) {
    values[idx] = hilbert_value(x, d);
    // increment mixed-radix counter, last axis fastest
    std::size_t a = x.arity();
    while (a > 0) {
      --a;
      if (d.parts[a] < box.upper.parts[a]) {
        ++d.parts[a];
        break;
      }
      d.parts[a] = 0;
    }
  }
  std::vector<std::size_t> t(x.arity(), 0);
  if (x.size() > 0) {
    for (std::size_t a = 0; a < x.arity(); ++a) {
      t[a] = projection_count(x, a);
    }
  }
  return HilbertTable(box, std::move(values), x.size(), std::move(t));
}

MultiDegree stabilization_corner(const PointSet& x) {
  if (x.size() == 0) {
    throw std::invalid_argument("stabilization corner undefined for an empty point set");
  }
  MultiDegree corner{std::vector<int>(x.arity())};
  for (std::size_t a = 0; a < x.arity(); ++a) {
    corner.parts[a] = static_cast<int>(projection_count(x, a)) - 1;
  }
  return corner;
}

DifferenceSequence difference_sequence(const PointSet& x, const std::vector<int>& fixed,
                                       std::size_t free_axis, std::size_t k_max) {
  if (free_axis >= x.arity()) {
    throw std::invalid_argument("free axis out of range");
  }
  if (fixed.size() + 1 != x.arity()) {
    throw std::invalid_argument("expected " + std::to_string(x.arity() - 1) +
                                " fixed degrees, got " + std::to_string(fixed.size()));
  }
  MultiDegree d{std::vector<int>(x.arity())};
  for (std::size_t a = 0, f = 0; a < x.arity(); ++a) {
    if (a != free_axis) {
      d.parts[a] = fixed[f++];
    }
  }
  DifferenceSequence seq{fixed, free_axis, {}};
  seq.values.reserve(k_max + 1);
  long long prev = 0;  // H at free index -1
  for (std::size_t k = 0; k <= k_max; ++k) {
    d.parts[free_axis] = static_cast<int>(k);
    const long long h = static_cast<long long>(hilbert_value(x, d));
    seq.values.push_back(h - prev);
    prev = h;
  }
  return seq;
}

std::size_t collinear_closed_form(std::size_t s, std::size_t k) {
  assert(s >= 1);
  return std::min(k + 1, s);
}

}  // namespace mgp
