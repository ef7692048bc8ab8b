#pragma once

// The parabolic subgroup P stabilizing the standard r|s subspace, its
// unipotent complement N, the big cell, and the coset normal form g = n * p.
//
// Rows and columns of an (m|n) x (m|n) matrix are split into four blocks of
// sizes r, m-r, n-s, s (blocks 1 and 2 even, blocks 3 and 4 odd). The
// standard subspace W is spanned by the basis vectors of blocks 1 and 4.
//
//          | I   0   0   0 |            | *   *   *   * |
//   N(R) = | u   I   0   eta |   P(R) = | 0   *   *   0 |
//          | xi  0   I   v |            | 0   *   *   0 |
//          | 0   0   0   I |            | *   *   *   * |

#include <array>
#include <cstddef>
#include <string>

#include "sgq/supermatrix.hpp"

namespace sgq {

struct BlockProfile {
  std::size_t m = 0;  // even dimension of the ambient space
  std::size_t n = 0;  // odd dimension of the ambient space
  std::size_t r = 0;  // even dimension of W
  std::size_t s = 0;  // odd dimension of W

  /// Throws std::invalid_argument unless r <= m and s <= n.
  BlockProfile(std::size_t m, std::size_t n, std::size_t r, std::size_t s);
  BlockProfile() = default;

  /// Block k in 1..4: sizes r, m-r, n-s, s.
  std::size_t size(int k) const;
  std::size_t offset(int k) const;
  SuperShape ambient_shape() const { return SuperShape::square(m, n); }
  SuperShape span_shape() const { return SuperShape{m, n, r, s}; }

  std::string to_string() const;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

/// Block (i, j) of g, 1-based, with the grading inherited from g.
SuperMatrix profile_block(const SuperMatrix& g, const BlockProfile& bp, int i, int j);

/// Coordinates on N: u is (m-r)x r even, eta is (m-r) x s odd, xi is
/// (n-s) x r odd, v is (n-s) x s even.
class NCoordinates {
 public:
  /// Throws ShapeMismatch or RingMismatch.
  NCoordinates(BlockProfile profile, SuperMatrix u, SuperMatrix eta, SuperMatrix xi, SuperMatrix v);

  static NCoordinates zero(const BlockProfile& profile, const SuperRingSpec& ring);
  static SuperShape u_shape(const BlockProfile& bp) { return {bp.m - bp.r, 0, bp.r, 0}; }
  static SuperShape eta_shape(const BlockProfile& bp) { return {bp.m - bp.r, 0, 0, bp.s}; }
  static SuperShape xi_shape(const BlockProfile& bp) { return {0, bp.n - bp.s, bp.r, 0}; }
  static SuperShape v_shape(const BlockProfile& bp) { return {0, bp.n - bp.s, 0, bp.s}; }

  const BlockProfile& profile() const { return profile_; }
  const SuperRingSpec& ring() const { return ring_; }
  const SuperMatrix& u() const { return u_; }
  const SuperMatrix& eta() const { return eta_; }
  const SuperMatrix& xi() const { return xi_; }
  const SuperMatrix& v() const { return v_; }

  friend bool operator==(const NCoordinates& a, const NCoordinates& b);

 private:
  BlockProfile profile_;
  SuperRingSpec ring_;
  SuperMatrix u_, eta_, xi_, v_;
};

/// The N-shaped matrix carrying the given coordinates.
SuperMatrix assemble(const NCoordinates& coords);

/// Blocks (2,1), (3,1), (2,4), (3,4) vanish. Throws ShapeMismatch.
bool standard_parabolic_member(const SuperMatrix& g, const BlockProfile& bp);

/// Identity diagonal blocks, zero outside the diagonal and the four N blocks.
bool n_member(const SuperMatrix& g, const BlockProfile& bp);

/// Bodies of g11 and g44 are invertible.
bool in_big_cell(const SuperMatrix& g, const BlockProfile& bp);

struct CosetFactorization {
  NCoordinates n;
  SuperMatrix p;
};

/// Unique g = assemble(n) * p with p in P, by block elimination:
///   rows 1 and 4 of p are rows 1 and 4 of g,
///   u   = (g21 - g24 g44^-1 g41)(g11 - g14 g44^-1 g41)^-1,  eta = (g24 - u g14) g44^-1,
///   v   = (g34 - g31 g11^-1 g14)(g44 - g41 g11^-1 g14)^-1,  xi  = (g31 - v g41) g11^-1,
///   row 2 of p = row 2 of g - u (row 1) - eta (row 4),
///   row 3 of p = row 3 of g - xi (row 1) - v (row 4).
/// Only the big-cell condition is checked; invertibility of the whole of g
/// is the caller's precondition. Throws NotInBigCell, ShapeMismatch.
CosetFactorization normal_form(const SuperMatrix& g, const BlockProfile& bp);

/// g1 P = g2 P. Throws NotInvertible if g1 is not invertible.
bool cosets_equal(const SuperMatrix& g1, const SuperMatrix& g2, const BlockProfile& bp);

}  // namespace sgq
