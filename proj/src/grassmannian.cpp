#include "sgq/grassmannian.hpp"

#include "sgq/errors.hpp"
#include "sgq/even_linalg.hpp"

namespace sgq {

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> window_rows(const BlockProfile& bp) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < bp.r; ++i) rows.push_back(bp.offset(1) + i);
  for (std::size_t i = 0; i < bp.s; ++i) rows.push_back(bp.offset(4) + i);
  return rows;
}

std::vector<std::size_t> all_cols(const SuperMatrix& x) {
  std::vector<std::size_t> cols(x.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cols;
}

// span * (rows-submatrix)^-1; the chosen rows become the identity.
SuperMatrix normalize(const SuperMatrix& span, const std::vector<std::size_t>& rows) {
  return span * sm_inv(span.select(rows, all_cols(span)));
}

}  // namespace

GrassmannianPoint::GrassmannianPoint(BlockProfile profile, SuperMatrix span)
    : profile_(profile), span_(std::move(span)) {
  if (!(span_.shape() == profile_.span_shape())) {
    throw ShapeMismatch("span " + span_.shape().to_string() + " does not fit profile " + profile_.to_string());
  }
  if (!find_row_choice(span_, profile_)) throw RankDeficient("span has no invertible (r|s) row choice");
}

std::optional<std::vector<std::size_t>> find_row_choice(const SuperMatrix& span, const BlockProfile& bp) {
  // The body of the span is block diagonal, so the even and odd row choices
  // can be made independently; the first valid pair in lexicographic order
  // is the first valid even subset with the first valid odd subset.
  const SuperMatrix body = span.body();
  auto pick = [&](std::size_t row_offset, std::size_t total, std::size_t col_offset, std::size_t k)
      -> std::optional<std::vector<std::size_t>> {
    std::optional<std::vector<std::size_t>> found;
    for_each_subset(total, k, [&](const std::vector<std::size_t>& idx) {
      std::vector<SuperElement> sub;
      sub.reserve(k * k);
      for (auto i : idx)
        for (std::size_t j = 0; j < k; ++j) sub.push_back(body(row_offset + i, col_offset + j));
      if (!even::body_invertible(span.ring(), k, sub)) return false;
      std::vector<std::size_t> rows;
      for (auto i : idx) rows.push_back(row_offset + i);
      found = std::move(rows);
      return true;
    });
    return found;
  };
  auto even_rows = pick(0, bp.m, 0, bp.r);
  if (!even_rows) return std::nullopt;
  auto odd_rows = pick(bp.m, bp.n, bp.r, bp.s);
  if (!odd_rows) return std::nullopt;
  even_rows->insert(even_rows->end(), odd_rows->begin(), odd_rows->end());
  return even_rows;
}

GrassmannianPoint standard_point(const BlockProfile& bp, const SuperRingSpec& ring) {
  SuperMatrix span(ring, bp.span_shape());
  const SuperElement one(ring, Gaussian(1));
  for (std::size_t i = 0; i < bp.r; ++i) span.set(bp.offset(1) + i, i, one);
  for (std::size_t i = 0; i < bp.s; ++i) span.set(bp.offset(4) + i, bp.r + i, one);
  return GrassmannianPoint(bp, std::move(span));
}

bool points_equal(const GrassmannianPoint& a, const GrassmannianPoint& b) {
  if (!(a.profile() == b.profile())) throw ShapeMismatch("points_equal: different profiles");
  if (!(a.ring() == b.ring())) throw RingMismatch("points_equal");
  auto rows = find_row_choice(a.span(), a.profile());
  if (!rows) throw RankDeficient("first span has no invertible row choice");
  if (!find_row_choice(b.span(), b.profile())) throw RankDeficient("second span has no invertible row choice");
  // If span_b = span_a h then the same rows of span_b form sub_a h, which
  // is invertible; a singular body there already separates the points.
  if (!sm_invertible(b.span().select(*rows, all_cols(b.span())))) return false;
  return normalize(a.span(), *rows) == normalize(b.span(), *rows);
}

GrassmannianPoint act(const SuperMatrix& g, const GrassmannianPoint& point) {
  if (!(g.shape() == point.profile().ambient_shape())) {
    throw ShapeMismatch("act: matrix " + g.shape().to_string() + " on profile " + point.profile().to_string());
  }
  return GrassmannianPoint(point.profile(), g * point.span());
}

GrassmannianPoint orbit_map(const SuperMatrix& g, const BlockProfile& bp) {
  if (!(g.shape() == bp.ambient_shape())) {
    throw ShapeMismatch("orbit_map: matrix " + g.shape().to_string() + " on profile " + bp.to_string());
  }
  std::vector<std::size_t> rows(g.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return GrassmannianPoint(bp, g.select(rows, window_rows(bp)));
}

GrassmannianPoint chart_up(const NCoordinates& coords) { return orbit_map(assemble(coords), coords.profile()); }

NCoordinates chart_down(const GrassmannianPoint& point) {
  const auto& bp = point.profile();
  const auto rows = window_rows(bp);
  if (!sm_invertible(point.span().select(rows, all_cols(point.span())))) {
    throw NotInBigCell("rows of blocks 1 and 4 have singular body");
  }
  SuperMatrix normalized = normalize(point.span(), rows);
  return NCoordinates(bp, normalized.block(bp.offset(2), bp.size(2), 0, bp.r),
                      normalized.block(bp.offset(2), bp.size(2), bp.r, bp.s),
                      normalized.block(bp.offset(3), bp.size(3), 0, bp.r),
                      normalized.block(bp.offset(3), bp.size(3), bp.r, bp.s));
}

}  // namespace sgq
