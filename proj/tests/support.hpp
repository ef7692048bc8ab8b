#pragma once

#include <vector>

#include "sgq/supermatrix.hpp"

namespace sgq::testing {

inline SuperElement k(const SuperRingSpec& ring, long num, long den = 1) {
  return SuperElement(ring, Gaussian(mpq_class(num, den)));
}

// theta_i, 1-based like the usual notation.
inline SuperElement th(const SuperRingSpec& ring, std::size_t i) { return SuperElement::odd_var(ring, i - 1); }

inline SuperMatrix square(const SuperRingSpec& ring, std::size_t m, std::size_t n,
                          const std::vector<std::vector<SuperElement>>& rows) {
  return sm_validate(ring, SuperShape::square(m, n), rows);
}

// [[1, th1], [th2, 1]] of shape (1|1).
inline SuperMatrix sample_11(const SuperRingSpec& ring) {
  return square(ring, 1, 1, {{k(ring, 1), th(ring, 1)}, {th(ring, 2), k(ring, 1)}});
}

}  // namespace sgq::testing
