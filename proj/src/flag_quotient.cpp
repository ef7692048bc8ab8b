#include "sgq/flag_quotient.hpp"

#include <sstream>
#include <stdexcept>

#include "sgq/errors.hpp"

namespace sgq {

namespace {

void require_ambient(const SuperMatrix& g, const BlockProfile& bp, const char* op) {
  if (!(g.shape() == bp.ambient_shape())) {
    throw ShapeMismatch(std::string(op) + ": matrix " + g.shape().to_string() + " does not fit profile " +
                        bp.to_string());
  }
}

void require_shape(const SuperMatrix& x, const SuperShape& want, const char* name) {
  if (!(x.shape() == want)) {
    throw ShapeMismatch(std::string(name) + " has shape " + x.shape().to_string() + ", expected " + want.to_string());
  }
}

bool is_identity(const SuperMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto& e = x(i, j);
      if (i == j ? !(e.is_constant() && e.constant_term().is_one()) : !e.is_zero()) return false;
    }
  }
  return true;
}

SuperMatrix row_band(const SuperMatrix& g, const BlockProfile& bp, int k) {
  return g.block(bp.offset(k), bp.size(k), 0, g.cols());
}

}  // namespace

BlockProfile::BlockProfile(std::size_t m_, std::size_t n_, std::size_t r_, std::size_t s_) : m(m_), n(n_), r(r_), s(s_) {
  if (r > m || s > n) throw std::invalid_argument("profile requires r <= m and s <= n, got " + to_string());
}

std::size_t BlockProfile::size(int k) const {
  switch (k) {
    case 1: return r;
    case 2: return m - r;
    case 3: return n - s;
    case 4: return s;
    default: throw std::out_of_range("block index must be 1..4");
  }
}

std::size_t BlockProfile::offset(int k) const {
  switch (k) {
    case 1: return 0;
    case 2: return r;
    case 3: return m;
    case 4: return m + n - s;
    default: throw std::out_of_range("block index must be 1..4");
  }
}

std::string BlockProfile::to_string() const {
  std::ostringstream out;
  out << "(m=" << m << ", n=" << n << ", r=" << r << ", s=" << s << ")";
  return out.str();
}

SuperMatrix profile_block(const SuperMatrix& g, const BlockProfile& bp, int i, int j) {
  return g.block(bp.offset(i), bp.size(i), bp.offset(j), bp.size(j));
}

// ---------------------------------------------------------------------------
// NCoordinates

NCoordinates::NCoordinates(BlockProfile profile, SuperMatrix u, SuperMatrix eta, SuperMatrix xi, SuperMatrix v)
    : profile_(profile), ring_(u.ring()), u_(std::move(u)), eta_(std::move(eta)), xi_(std::move(xi)), v_(std::move(v)) {
  require_shape(u_, u_shape(profile_), "u");
  require_shape(eta_, eta_shape(profile_), "eta");
  require_shape(xi_, xi_shape(profile_), "xi");
  require_shape(v_, v_shape(profile_), "v");
  if (!(eta_.ring() == ring_) || !(xi_.ring() == ring_) || !(v_.ring() == ring_)) {
    throw RingMismatch("N coordinates over different rings");
  }
}

NCoordinates NCoordinates::zero(const BlockProfile& profile, const SuperRingSpec& ring) {
  return NCoordinates(profile, SuperMatrix(ring, u_shape(profile)), SuperMatrix(ring, eta_shape(profile)),
                      SuperMatrix(ring, xi_shape(profile)), SuperMatrix(ring, v_shape(profile)));
}

bool operator==(const NCoordinates& a, const NCoordinates& b) {
  return a.profile_ == b.profile_ && a.u_ == b.u_ && a.eta_ == b.eta_ && a.xi_ == b.xi_ && a.v_ == b.v_;
}

SuperMatrix assemble(const NCoordinates& coords) {
  const auto& bp = coords.profile();
  SuperMatrix g = SuperMatrix::identity(coords.ring(), bp.m, bp.n);
  g.set_block(bp.offset(2), bp.offset(1), coords.u());
  g.set_block(bp.offset(2), bp.offset(4), coords.eta());
  g.set_block(bp.offset(3), bp.offset(1), coords.xi());
  g.set_block(bp.offset(3), bp.offset(4), coords.v());
  return g;
}

// ---------------------------------------------------------------------------
// Membership tests

bool standard_parabolic_member(const SuperMatrix& g, const BlockProfile& bp) {
  require_ambient(g, bp, "standard_parabolic_member");
  for (int i : {2, 3})
    for (int j : {1, 4})
      if (!profile_block(g, bp, i, j).is_zero()) return false;
  return true;
}

bool n_member(const SuperMatrix& g, const BlockProfile& bp) {
  require_ambient(g, bp, "n_member");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      SuperMatrix b = profile_block(g, bp, i, j);
      if (i == j) {
        if (!is_identity(b)) return false;
      } else if (!((i == 2 || i == 3) && (j == 1 || j == 4))) {
        if (!b.is_zero()) return false;
      }
    }
  }
  return true;
}

bool in_big_cell(const SuperMatrix& g, const BlockProfile& bp) {
  require_ambient(g, bp, "in_big_cell");
  return sm_invertible(profile_block(g, bp, 1, 1)) && sm_invertible(profile_block(g, bp, 4, 4));
}

// ---------------------------------------------------------------------------
// Normal form

CosetFactorization normal_form(const SuperMatrix& g, const BlockProfile& bp) {
  require_ambient(g, bp, "normal_form");
  if (!in_big_cell(g, bp)) throw NotInBigCell("body of g11 or g44 is singular for profile " + bp.to_string());

  auto blk = [&](int i, int j) { return profile_block(g, bp, i, j); };
  const SuperMatrix g11 = blk(1, 1), g14 = blk(1, 4), g41 = blk(4, 1), g44 = blk(4, 4);
  const SuperMatrix g11_inv = even_block_inverse(g11);
  const SuperMatrix g44_inv = even_block_inverse(g44);

  const SuperMatrix schur1 = g11 - g14 * g44_inv * g41;
  const SuperMatrix schur4 = g44 - g41 * g11_inv * g14;

  SuperMatrix u = (blk(2, 1) - blk(2, 4) * g44_inv * g41) * even_block_inverse(schur1);
  SuperMatrix eta = (blk(2, 4) - u * g14) * g44_inv;
  SuperMatrix v = (blk(3, 4) - blk(3, 1) * g11_inv * g14) * even_block_inverse(schur4);
  SuperMatrix xi = (blk(3, 1) - v * g41) * g11_inv;

  const SuperMatrix row1 = row_band(g, bp, 1);
  const SuperMatrix row4 = row_band(g, bp, 4);
  SuperMatrix p = g;
  p.set_block(bp.offset(2), 0, row_band(g, bp, 2) - u * row1 - eta * row4);
  p.set_block(bp.offset(3), 0, row_band(g, bp, 3) - xi * row1 - v * row4);

  return {NCoordinates(bp, std::move(u), std::move(eta), std::move(xi), std::move(v)), std::move(p)};
}

bool cosets_equal(const SuperMatrix& g1, const SuperMatrix& g2, const BlockProfile& bp) {
  require_ambient(g1, bp, "cosets_equal");
  require_ambient(g2, bp, "cosets_equal");
  return standard_parabolic_member(sm_inv(g1) * g2, bp);
}

}  // namespace sgq
