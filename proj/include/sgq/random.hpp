#pragma once

// Seeded generators for property tests. Every draw goes through
// std::mt19937_64, whose output sequence is fixed by the standard, so a
// given (seed, stream) reproduces the same values on every platform.

#include <cstdint>
#include <random>

#include "sgq/flag_quotient.hpp"

namespace sgq::gen {

class Rng {
 public:
  /// Independent stream per (seed, stream, index).
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  long between(long lo, long hi);
  bool chance(unsigned numerator, unsigned denominator);

 private:
  std::mt19937_64 engine_;
};

struct Bounds {
  long coeff = 5;              // |numerator| and denominator bound
  std::size_t max_terms = 4;   // terms per random element
  std::uint32_t max_exponent = 2;
  unsigned complex_percent = 20;  // chance that a coefficient has an imaginary part
};

Gaussian coefficient(Rng& rng, const Bounds& b);
Gaussian nonzero_coefficient(Rng& rng, const Bounds& b);

/// Homogeneous element of the given parity; may be zero.
SuperElement element(Rng& rng, const SuperRingSpec& ring, Parity parity, const Bounds& b);
/// Homogeneous element with zero body.
SuperElement soul(Rng& rng, const SuperRingSpec& ring, Parity parity, const Bounds& b);

/// Pattern-valid matrix with arbitrary entries.
SuperMatrix matrix(Rng& rng, const SuperRingSpec& ring, const SuperShape& shape, const Bounds& b);

/// B (I + S): B a random numeric block-diagonal invertible body, S a soul
/// perturbation. Always invertible.
SuperMatrix invertible(Rng& rng, const SuperRingSpec& ring, std::size_t m, std::size_t n, const Bounds& b);

/// Invertible with g11 and g44 invertible.
SuperMatrix big_cell(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b);

/// Invertible element of the standard parabolic.
SuperMatrix parabolic(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b);

/// Invertible g for stabilizer tests: a parabolic element, a parabolic
/// element with one nilpotent entry added in a block that P forces to zero,
/// or a general invertible element, half of those moved out of the big cell
/// by reversing the coordinate order. Each case about 1/3 of the time.
SuperMatrix stabilizer_probe(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b);

NCoordinates ncoordinates(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b);

/// B (I + S) where the numeric body B has a zero row in block A or in
/// block D with probability about 1/3 each, so it is invertible about 1/3
/// of the time.
SuperMatrix maybe_singular(Rng& rng, const SuperRingSpec& ring, std::size_t m, std::size_t n, const Bounds& b);

}  // namespace sgq::gen
