#pragma once

// T-points of the super Grassmannian Gr(r|s; m|n), represented as framed
// spans: an (m|n) x (r|s) matrix of full rank, up to right multiplication by
// GL(r|s)(R).

#include <optional>
#include <vector>

#include "sgq/flag_quotient.hpp"

namespace sgq {

class GrassmannianPoint {
 public:
  /// Throws ShapeMismatch if span is not (m|n) x (r|s), RankDeficient if no
  /// choice of r even and s odd rows has an invertible body.
  GrassmannianPoint(BlockProfile profile, SuperMatrix span);

  const BlockProfile& profile() const { return profile_; }
  const SuperMatrix& span() const { return span_; }
  const SuperRingSpec& ring() const { return span_.ring(); }

 private:
  BlockProfile profile_;
  SuperMatrix span_;
};

/// First choice of r even and s odd rows (lexicographic over even subsets,
/// then odd subsets) on which the span has invertible body. Row indices are
/// absolute and increasing.
std::optional<std::vector<std::size_t>> find_row_choice(const SuperMatrix& span, const BlockProfile& bp);

/// Identity blocks on row blocks 1 and 4.
GrassmannianPoint standard_point(const BlockProfile& bp, const SuperRingSpec& ring);

/// Same subspace: span1 * h = span2 for some h in GL(r|s)(R).
/// Throws ShapeMismatch on differing profiles, RingMismatch on differing rings.
bool points_equal(const GrassmannianPoint& a, const GrassmannianPoint& b);

/// span -> g * span. Throws ShapeMismatch.
GrassmannianPoint act(const SuperMatrix& g, const GrassmannianPoint& point);

/// g . standard_point: the columns of g in blocks 1 and 4.
GrassmannianPoint orbit_map(const SuperMatrix& g, const BlockProfile& bp);

/// The chart N(R) -> pi(U)(R).
GrassmannianPoint chart_up(const NCoordinates& coords);

/// Inverse chart. Throws NotInBigCell when rows of blocks 1 and 4 have singular body.
NCoordinates chart_down(const GrassmannianPoint& point);

}  // namespace sgq
