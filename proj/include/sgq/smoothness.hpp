#pragma once

// Presentations R[x, xi]/(f, phi) of affine superschemes over a base, the
// super-Jacobian, and the pointwise smooth / etale test.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgq/supermatrix.hpp"

namespace sgq {

class Presentation {
 public:
  /// Relations live in `combined_ring(base, fiber)`. Throws RingMismatch,
  /// ParityViolation for inhomogeneous or wrongly graded relations, and
  /// std::invalid_argument when base and fiber share a name.
  Presentation(SuperRingSpec base, SuperRingSpec fiber, std::vector<SuperElement> even_relations,
               std::vector<SuperElement> odd_relations);

  /// Base generators first, then fiber generators, per parity.
  static SuperRingSpec combined_ring(const SuperRingSpec& base, const SuperRingSpec& fiber);

  const SuperRingSpec& base() const { return base_; }
  const SuperRingSpec& fiber() const { return fiber_; }
  const SuperRingSpec& ring() const { return ring_; }
  const std::vector<SuperElement>& even_relations() const { return even_relations_; }
  const std::vector<SuperElement>& odd_relations() const { return odd_relations_; }

 private:
  SuperRingSpec base_;
  SuperRingSpec fiber_;
  SuperRingSpec ring_;
  std::vector<SuperElement> even_relations_;
  std::vector<SuperElement> odd_relations_;
};

/// Values for even variables; every odd variable is 0 at a rational point.
struct RationalPoint {
  std::map<std::string, Gaussian, std::less<>> values;
};

struct SmoothnessVerdict {
  bool smooth = false;
  std::size_t even_rank = 0;
  std::size_t odd_rank = 0;
  /// (even | odd) relative dimension, present iff smooth.
  std::optional<std::pair<std::size_t, std::size_t>> relative_dimension;

  friend bool operator==(const SmoothnessVerdict&, const SmoothnessVerdict&) = default;
};

/// d(f_i, phi_j) / d(x_k, xi_l) over fiber variables, left derivatives for
/// odd ones. Rows are graded (even relations | odd relations), columns
/// (even fiber vars | odd fiber vars), so the result is a supermatrix.
SuperMatrix jacobian(const Presentation& pres);

/// Evaluates `a` at the point: even fiber variables take their values,
/// base even variables theirs when assigned, all odd variables become 0.
/// Throws NotAPoint for a missing fiber value, UnknownVariable for a name
/// outside the ring, ParityViolation for a value assigned to an odd name.
SuperElement evaluate_at(const Presentation& pres, const RationalPoint& pt, const SuperElement& a);

/// (rank of d f / d x, rank of d phi / d xi) at the point. Throws NotAPoint
/// when a relation does not vanish there.
std::pair<std::size_t, std::size_t> rank_at_point(const Presentation& pres, const RationalPoint& pt);

SmoothnessVerdict is_smooth_at(const Presentation& pres, const RationalPoint& pt);

/// Smooth of relative dimension 0|0.
bool is_etale_at(const Presentation& pres, const RationalPoint& pt);

/// GL(m|n): even entries a_i_j, d_i_j and t, odd entries b_i_j, c_i_j, with
/// the single relation t det(A) det(D) - 1.
Presentation gl_presentation(std::size_t m, std::size_t n);
RationalPoint gl_identity_point(std::size_t m, std::size_t n);

/// Adjoins k even and l odd fresh fiber variables with no new relations.
Presentation adjoin_free(const Presentation& pres, std::size_t k, std::size_t l);

}  // namespace sgq
