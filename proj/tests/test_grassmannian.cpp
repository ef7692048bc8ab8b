#include <gtest/gtest.h>

#include "sgq/errors.hpp"
#include "sgq/grassmannian.hpp"
#include "sgq/random.hpp"
#include "support.hpp"

using namespace sgq;
using sgq::testing::k;
using sgq::testing::th;

namespace {

NCoordinates xi_only(const BlockProfile& bp, const SuperElement& value) {
  auto z = NCoordinates::zero(bp, value.ring());
  return NCoordinates(bp, z.u(), z.eta(), sm_validate(value.ring(), NCoordinates::xi_shape(bp), {{value}}), z.v());
}

}  // namespace

TEST(StandardPoint, Shapes) {
  auto R = grassmann_ring(2);
  auto p = standard_point(BlockProfile(1, 1, 1, 0), R);
  EXPECT_EQ(p.span(), sm_validate(R, SuperShape{1, 1, 1, 0}, {{k(R, 1)}, {k(R, 0)}}));
  auto q = standard_point(BlockProfile(2, 2, 1, 1), R);
  EXPECT_EQ(q.span()(0, 0), k(R, 1));
  EXPECT_EQ(q.span()(3, 1), k(R, 1));
  EXPECT_TRUE(q.span()(1, 0).is_zero());
  EXPECT_TRUE(points_equal(q, q));
}

TEST(GrassmannianPoint, RejectsBadSpans) {
  auto R = grassmann_ring(2);
  BlockProfile bp(1, 1, 1, 0);
  EXPECT_THROW(GrassmannianPoint(bp, SuperMatrix(R, SuperShape{1, 1, 1, 1})), ShapeMismatch);
  EXPECT_THROW(GrassmannianPoint(bp, sm_validate(R, SuperShape{1, 1, 1, 0}, {{k(R, 0)}, {th(R, 1)}})), RankDeficient);
}

TEST(GrassmannianPoint, RowChoiceOutsideWindow) {
  auto R = grassmann_ring(2);
  BlockProfile bp(2, 0, 1, 0);
  GrassmannianPoint p(bp, sm_validate(R, SuperShape{2, 0, 1, 0}, {{th(R, 1) * th(R, 2)}, {k(R, 3)}}));
  EXPECT_EQ(find_row_choice(p.span(), bp), std::vector<std::size_t>{1});
  EXPECT_THROW(chart_down(p), NotInBigCell);
  EXPECT_FALSE(points_equal(p, standard_point(bp, R)));
}

TEST(PointsEqual, RightEquivalence) {
  auto R = grassmann_ring(4);
  BlockProfile bp(2, 2, 1, 1);
  for (std::uint64_t t = 0; t < 10; ++t) {
    gen::Rng rng(2, 0, t);
    auto p = orbit_map(gen::invertible(rng, R, 2, 2, gen::Bounds{}), bp);
    auto h = gen::invertible(rng, R, 1, 1, gen::Bounds{});
    EXPECT_TRUE(points_equal(p, GrassmannianPoint(bp, p.span() * h)));
  }
  auto two = grassmann_ring(2);
  BlockProfile small(1, 1, 1, 0);
  EXPECT_FALSE(points_equal(standard_point(small, two), chart_up(xi_only(small, th(two, 1)))));
}

TEST(Action, Examples) {
  auto R = grassmann_ring(4);
  BlockProfile bp(2, 2, 1, 1);
  auto base = standard_point(bp, R);
  EXPECT_EQ(act(SuperMatrix::identity(R, 2, 2), base).span(), base.span());
  EXPECT_EQ(orbit_map(SuperMatrix::identity(R, 2, 2), bp).span(), base.span());
  for (std::uint64_t t = 0; t < 10; ++t) {
    gen::Rng rng(4, 0, t);
    auto p = gen::parabolic(rng, R, bp, gen::Bounds{});
    EXPECT_TRUE(points_equal(act(p, base), base));
    auto g = gen::invertible(rng, R, 2, 2, gen::Bounds{});
    EXPECT_EQ(orbit_map(g, bp).span(), act(g, base).span());
  }
  EXPECT_THROW(act(SuperMatrix::identity(R, 1, 1), base), ShapeMismatch);
}

TEST(Chart, Examples) {
  auto R = grassmann_ring(2);
  BlockProfile bp(1, 1, 1, 0);
  EXPECT_EQ(chart_up(NCoordinates::zero(bp, R)).span(), standard_point(bp, R).span());
  auto up = chart_up(xi_only(bp, th(R, 2)));
  EXPECT_EQ(up.span(), sm_validate(R, SuperShape{1, 1, 1, 0}, {{k(R, 1)}, {th(R, 2)}}));
  EXPECT_EQ(chart_down(up), xi_only(bp, th(R, 2)));
  EXPECT_EQ(chart_down(standard_point(bp, R)), NCoordinates::zero(bp, R));
  // a rescaled frame gives the same coordinates
  GrassmannianPoint scaled(bp, sm_validate(R, SuperShape{1, 1, 1, 0}, {{k(R, 2)}, {k(R, 2) * th(R, 2)}}));
  EXPECT_EQ(chart_down(scaled), xi_only(bp, th(R, 2)));
}

TEST(Chart, RoundTrips) {
  auto R = grassmann_ring(4);
  for (BlockProfile bp : {BlockProfile(2, 1, 1, 1), BlockProfile(3, 2, 2, 1)}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      gen::Rng rng(6, 0, t);
      auto n = gen::ncoordinates(rng, R, bp, gen::Bounds{});
      EXPECT_EQ(chart_down(chart_up(n)), n);
      auto g = gen::big_cell(rng, R, bp, gen::Bounds{});
      auto pt = orbit_map(g, bp);
      EXPECT_TRUE(points_equal(chart_up(chart_down(pt)), pt));
      EXPECT_EQ(chart_down(pt), normal_form(g, bp).n);
    }
  }
}
