#pragma once

#include <random>
#include <string>
#include <vector>

#include "supertri/algebra.hpp"
#include "supertri/fixtures.hpp"

namespace test_support {

using namespace supertri;

inline Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline LinearMap mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  return LinearMap::from_rows(rows);
}

inline std::vector<TrialgebraSpec> corpus() {
  std::vector<TrialgebraSpec> out;
  for (const auto& name : builtin_names()) out.push_back(builtin(name));
  return out;
}

/// Entries drawn uniformly from {lo..hi}.
inline LinearMap random_map(std::size_t rows, std::size_t cols, std::mt19937& rng, int lo = -2,
                            int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  LinearMap m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Random even map with entries in {-2..2}, resampled until invertible.
inline LinearMap random_even_invertible(const SuperBasis& basis, std::mt19937& rng) {
  const std::size_t n = basis.dim();
  for (;;) {
    LinearMap m = random_map(n, n, rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (basis.parity(i) != basis.parity(j)) m(i, j) = 0;
    if (rref(m).rank() == n) return m;
  }
}

}  // namespace test_support
