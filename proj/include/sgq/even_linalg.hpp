#pragma once

// Linear algebra over the commutative even subring. Every routine here
// assumes its input entries are even, so they commute; none of them divides
// except by units.

#include <cstddef>
#include <span>
#include <vector>

#include "sgq/super_element.hpp"

namespace sgq::even {

/// Row-major n x n determinant by cofactor expansion memoized over row
/// subsets. Division-free, so valid for polynomial entries.
SuperElement determinant(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries);

/// Inverse via the adjugate. Throws NotInvertible when the determinant is not
/// a unit (body a nonzero constant).
std::vector<SuperElement> inverse(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries);

/// Rank of the body of a rows x cols matrix over the fraction field of the
/// even polynomial ring. Fraction-free: rows are combined by cross
/// multiplication, never divided.
std::size_t body_rank(const SuperRingSpec& ring, std::size_t rows, std::size_t cols,
                      std::span<const SuperElement> entries);

/// True iff the body determinant is a nonzero constant.
bool body_invertible(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries);

}  // namespace sgq::even
