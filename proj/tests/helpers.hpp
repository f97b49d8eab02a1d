#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "latcov/domain.hpp"
#include "latcov/geom.hpp"

namespace latcov::test {

inline constexpr double kPi = 3.14159265358979323846;
inline const double kSqrt3 = std::sqrt(3.0);

// Best max-vertex-distance over all pairings of two point triples.
inline double triple_match_distance(const std::array<Point, 3>& a,
                                    const std::array<Point, 3>& b) {
  std::array<int, 3> idx = {0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  std::sort(idx.begin(), idx.end());
  do {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, distance(a[i], b[idx[i]]));
    best = std::min(best, m);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// Random 2x2 unimodular integer matrix with entries in [-5, 5], built from
// shear and swap factors so the determinant is exactly +-1.
inline std::array<int, 4> random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> shear(-2, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    int m[4] = {1, 0, 0, 1};
    for (int step = 0; step < 3; ++step) {
      int k = shear(rng);
      if (coin(rng)) {  // row1 += k * row2
        m[0] += k * m[2];
        m[1] += k * m[3];
      } else {
        m[2] += k * m[0];
        m[3] += k * m[1];
      }
    }
    bool in_range = true;
    for (int v : m) in_range = in_range && std::abs(v) <= 5;
    if (in_range && m[0] * m[3] - m[1] * m[2] == 1) return {m[0], m[1], m[2], m[3]};
  }
}

}  // namespace latcov::test
