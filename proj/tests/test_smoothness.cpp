#include <gtest/gtest.h>

#include "sgq/errors.hpp"
#include "sgq/smoothness.hpp"
#include "support.hpp"

using namespace sgq;
using sgq::testing::k;
using Dim = std::pair<std::size_t, std::size_t>;

namespace {

struct Fixture {
  SuperRingSpec fiber;
  SuperRingSpec ring;
  SuperElement x() const { return SuperElement::variable(ring, "x"); }
  SuperElement var(const char* name) const { return SuperElement::variable(ring, name); }
};

Fixture fixture(std::vector<std::string> even, std::vector<std::string> odd) {
  SuperRingSpec fiber(std::move(even), std::move(odd));
  return {fiber, Presentation::combined_ring(SuperRingSpec(), fiber)};
}

RationalPoint at_x(long value) {
  RationalPoint pt;
  pt.values["x"] = Gaussian(value);
  return pt;
}

}  // namespace

TEST(Jacobian, Examples) {
  auto f = fixture({"x"}, {"xi1", "xi2"});
  Presentation none(SuperRingSpec(), f.fiber, {}, {});
  EXPECT_EQ(jacobian(none).rows(), 0u);

  auto g = fixture({"x"}, {});
  Presentation p1(SuperRingSpec(), g.fiber, {g.x() * g.x() - k(g.ring, 1)}, {});
  EXPECT_EQ(jacobian(p1)(0, 0), k(g.ring, 2) * g.x());

  Presentation p2(SuperRingSpec(), f.fiber, {f.x() * f.x() - k(f.ring, 1) + f.var("xi1") * f.var("xi2")}, {});
  auto j = jacobian(p2);
  EXPECT_EQ(j.shape(), (SuperShape{1, 0, 1, 2}));
  EXPECT_EQ(j(0, 0), k(f.ring, 2) * f.x());
  EXPECT_EQ(j(0, 1), f.var("xi2"));
  EXPECT_EQ(j(0, 2), -f.var("xi1"));
}

TEST(Presentation, Validation) {
  auto f = fixture({"x"}, {"xi"});
  EXPECT_THROW(Presentation(SuperRingSpec(), f.fiber, {f.var("xi")}, {}), ParityViolation);
  EXPECT_THROW(Presentation(SuperRingSpec(), f.fiber, {}, {f.x()}), ParityViolation);
  EXPECT_THROW(Presentation(SuperRingSpec(), f.fiber, {f.x() + f.var("xi")}, {}), ParityViolation);
  EXPECT_THROW(Presentation(SuperRingSpec({"x"}, {}), f.fiber, {}, {}), std::invalid_argument);
  EXPECT_THROW(Presentation(SuperRingSpec(), f.fiber, {k(grassmann_ring(1), 1)}, {}), RingMismatch);
}

TEST(Rank, Examples) {
  auto g = fixture({"x"}, {});
  Presentation none(SuperRingSpec(), g.fiber, {}, {});
  EXPECT_EQ(rank_at_point(none, at_x(0)), Dim(0, 0));
  Presentation p1(SuperRingSpec(), g.fiber, {g.x() * g.x() - k(g.ring, 1)}, {});
  EXPECT_EQ(rank_at_point(p1, at_x(1)), Dim(1, 0));
  EXPECT_THROW(rank_at_point(p1, at_x(0)), NotAPoint);
  EXPECT_THROW(rank_at_point(p1, RationalPoint{}), NotAPoint);
  Presentation sq(SuperRingSpec(), g.fiber, {g.x() * g.x()}, {});
  EXPECT_EQ(rank_at_point(sq, at_x(0)), Dim(0, 0));
}

TEST(Smooth, Examples) {
  auto free = fixture({"x", "y"}, {"a", "b", "c"});
  RationalPoint pt;
  pt.values["x"] = Gaussian(3);
  pt.values["y"] = Gaussian(mpq_class(-1, 2));
  auto v = is_smooth_at(Presentation(SuperRingSpec(), free.fiber, {}, {}), pt);
  EXPECT_TRUE(v.smooth);
  EXPECT_EQ(v.relative_dimension, Dim(2, 3));
  EXPECT_FALSE(is_etale_at(Presentation(SuperRingSpec(), free.fiber, {}, {}), pt));

  auto f = fixture({"x"}, {"xi1", "xi2"});
  Presentation p2(SuperRingSpec(), f.fiber, {f.x() * f.x() - k(f.ring, 1) + f.var("xi1") * f.var("xi2")}, {});
  auto v2 = is_smooth_at(p2, at_x(1));
  EXPECT_TRUE(v2.smooth);
  EXPECT_EQ(v2.relative_dimension, Dim(0, 2));

  auto g = fixture({"x"}, {});
  EXPECT_FALSE(is_smooth_at(Presentation(SuperRingSpec(), g.fiber, {g.x() * g.x()}, {}), at_x(0)).smooth);
  EXPECT_TRUE(is_etale_at(Presentation(SuperRingSpec(), g.fiber, {g.x() * g.x() - k(g.ring, 1)}, {}), at_x(1)));

  auto h = fixture({"x"}, {"xi"});
  EXPECT_FALSE(is_etale_at(Presentation(SuperRingSpec(), h.fiber, {h.x() * h.x() - k(h.ring, 1)}, {}), at_x(1)));
}

TEST(Smooth, OddRelations) {
  auto f = fixture({"x"}, {"xi1", "xi2"});
  // phi = x xi1 - xi2 has odd rank 1 everywhere
  Presentation p(SuperRingSpec(), f.fiber, {}, {f.x() * f.var("xi1") - f.var("xi2")});
  auto v = is_smooth_at(p, at_x(0));
  EXPECT_TRUE(v.smooth);
  EXPECT_EQ(v.relative_dimension, Dim(1, 1));
  // phi = x xi1 drops odd rank at x = 0
  Presentation q(SuperRingSpec(), f.fiber, {}, {f.x() * f.var("xi1")});
  EXPECT_FALSE(is_smooth_at(q, at_x(0)).smooth);
  EXPECT_TRUE(is_smooth_at(q, at_x(2)).smooth);
}

TEST(Smooth, RelativeOverBase) {
  SuperRingSpec base({"t"}, {"e"});
  SuperRingSpec fiber({"x"}, {});
  auto ring = Presentation::combined_ring(base, fiber);
  auto t = SuperElement::variable(ring, "t");
  auto x = SuperElement::variable(ring, "x");
  // t (x - 1) over the base: rank is taken over the fraction field of the base
  Presentation p(base, fiber, {t * (x - k(ring, 1))}, {});
  RationalPoint pt;
  pt.values["x"] = Gaussian(1);
  auto v = is_smooth_at(p, pt);
  EXPECT_TRUE(v.smooth);
  EXPECT_EQ(v.relative_dimension, Dim(0, 0));
}

TEST(GL, SmoothAtIdentity) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}, {0, 1}, {1, 0}}) {
    auto v = is_smooth_at(gl_presentation(m, n), gl_identity_point(m, n));
    EXPECT_TRUE(v.smooth);
    EXPECT_EQ(v.relative_dimension, std::make_pair(m * m + n * n, 2 * m * n));
  }
}

TEST(AdjoinFree, AddsDimensions) {
  auto g = fixture({"x"}, {});
  Presentation etale(SuperRingSpec(), g.fiber, {g.x() * g.x() - k(g.ring, 1)}, {});
  auto bigger = adjoin_free(etale, 2, 3);
  EXPECT_EQ(bigger.fiber().num_even(), 3u);
  EXPECT_EQ(bigger.fiber().num_odd(), 3u);
  RationalPoint pt = at_x(1);
  for (std::size_t i = 1; i < 3; ++i) pt.values[bigger.fiber().even_vars()[i]] = Gaussian(0);
  auto v = is_smooth_at(bigger, pt);
  EXPECT_TRUE(v.smooth);
  EXPECT_EQ(v.relative_dimension, Dim(2, 3));
}
