#include <gtest/gtest.h>

#include "sgq/errors.hpp"
#include "sgq/super_element.hpp"
#include "support.hpp"

using namespace sgq;
using sgq::testing::k;
using sgq::testing::th;

namespace {

SuperRingSpec xr() { return SuperRingSpec({"x"}, {"th1", "th2", "th3"}); }

}  // namespace

TEST(Gaussian, ArithmeticAndFormatting) {
  Gaussian a(mpq_class(1, 2), mpq_class(3));
  Gaussian b(mpq_class(-1, 3));
  EXPECT_EQ((a * a.conj()).to_string(), "37/4");
  EXPECT_EQ(a * a.reciprocal(), Gaussian(1));
  EXPECT_EQ((a + b).re(), mpq_class(1, 6));
  EXPECT_THROW(Gaussian(0).reciprocal(), std::domain_error);
  EXPECT_EQ(rational_to_string(mpq_class(4, 2)), "2/1");
  EXPECT_EQ(rational_from_string("-6/4"), mpq_class(-3, 2));
  EXPECT_THROW(rational_from_string("1.5"), std::invalid_argument);
  EXPECT_THROW(rational_from_string("1/0"), std::invalid_argument);
}

TEST(SuperRing, RejectsDuplicatesAndTooManyOdd) {
  EXPECT_THROW(SuperRingSpec({"x"}, {"x"}), std::invalid_argument);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("t" + std::to_string(i));
  EXPECT_THROW(SuperRingSpec({}, many), std::invalid_argument);
  EXPECT_THROW(xr().lookup("y"), UnknownVariable);
}

TEST(SuperElement, KoszulSigns) {
  auto R = xr();
  EXPECT_EQ(th(R, 2) * th(R, 1), -(th(R, 1) * th(R, 2)));
  EXPECT_TRUE((th(R, 1) * th(R, 1)).is_zero());
  EXPECT_EQ((k(R, 1) + th(R, 1) * th(R, 2)) * (k(R, 1) - th(R, 1) * th(R, 2)), k(R, 1));
  auto x = SuperElement::variable(R, "x");
  EXPECT_EQ((x + th(R, 1)) * (x - th(R, 1)), x * x);
  // th1 th2 th3 reordered as th3 th1 th2 is an even permutation
  EXPECT_EQ(th(R, 3) * th(R, 1) * th(R, 2), th(R, 1) * th(R, 2) * th(R, 3));
  EXPECT_EQ(th(R, 3) * th(R, 2) * th(R, 1), -(th(R, 1) * th(R, 2) * th(R, 3)));
}

TEST(SuperElement, ParityAndBody) {
  auto R = xr();
  auto x = SuperElement::variable(R, "x");
  EXPECT_EQ(th(R, 1).parity(), Parity::Odd);
  EXPECT_FALSE((x + th(R, 1)).parity().has_value());
  EXPECT_TRUE(SuperElement(R).has_parity(Parity::Odd));
  EXPECT_EQ(body(x + th(R, 1) * th(R, 2)), x);
  EXPECT_TRUE(body(th(R, 1)).is_zero());
  EXPECT_EQ(body(k(R, 3) + k(R, 2) * th(R, 1) + th(R, 1) * th(R, 2)), k(R, 3));
  EXPECT_EQ((x + th(R, 1)).soul(), th(R, 1));
}

TEST(SuperElement, NeumannInverse) {
  auto R = xr();
  EXPECT_EQ(se_inv(k(R, 2)), k(R, 1, 2));
  EXPECT_EQ(se_inv(k(R, 1) + th(R, 1) * th(R, 2)), k(R, 1) - th(R, 1) * th(R, 2));
  EXPECT_THROW(se_inv(th(R, 1)), NotInvertible);
  EXPECT_THROW(se_inv(SuperElement::variable(R, "x")), NotInvertible);
  SuperElement a = k(R, 3) + th(R, 1) + th(R, 2) * th(R, 3) + th(R, 1) * th(R, 2) * th(R, 3);
  EXPECT_EQ(a * se_inv(a), k(R, 1));
  EXPECT_EQ(se_inv(a) * a, k(R, 1));
}

TEST(SuperElement, Pow) {
  auto R = xr();
  auto s = th(R, 1) * th(R, 2) + th(R, 3);
  EXPECT_EQ(s.pow(2), k(R, 2) * th(R, 1) * th(R, 2) * th(R, 3));
  EXPECT_TRUE(s.pow(3).is_zero());
  EXPECT_EQ(k(R, 2).pow(5), k(R, 32));
  EXPECT_EQ(s.pow(0), k(R, 1));
}

TEST(SuperHom, Substitute) {
  auto R = SuperRingSpec({"x"}, {"xi"});
  auto T = grassmann_ring(2);
  auto x = SuperElement::variable(R, "x");
  auto xi = SuperElement::variable(R, "xi");
  SuperHom h(R, T, {k(T, 1) + th(T, 1) * th(T, 2), th(T, 1)});
  EXPECT_EQ(substitute(h, x + k(R, 1)), k(T, 2) + th(T, 1) * th(T, 2));
  SuperHom h2(R, T, {th(T, 1) * th(T, 2), th(T, 1)});
  EXPECT_TRUE(substitute(h2, x * xi).is_zero());
  EXPECT_THROW(SuperHom(R, T, {th(T, 1), th(T, 2)}), ParityViolation);
  EXPECT_THROW(SuperHom(R, T, {k(T, 1)}), std::invalid_argument);
  auto inc = SuperHom::inclusion(SuperRingSpec({}, {"th1"}), T);
  EXPECT_EQ(substitute(inc, SuperElement::odd_var(SuperRingSpec({}, {"th1"}), 0)), th(T, 1));
}

TEST(SuperElement, Derivatives) {
  auto R = xr();
  auto x = SuperElement::variable(R, "x");
  EXPECT_EQ(partial_derivative(th(R, 1) * th(R, 2), "th1"), th(R, 2));
  EXPECT_EQ(partial_derivative(th(R, 1) * th(R, 2), "th2"), -th(R, 1));
  EXPECT_EQ(partial_derivative(x * x + x * th(R, 1), "x"), k(R, 2) * x + th(R, 1));
  EXPECT_THROW(partial_derivative(x, "nope"), UnknownVariable);
}

TEST(SuperElement, RingMismatch) {
  auto a = th(grassmann_ring(2), 1);
  auto b = th(grassmann_ring(3), 1);
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_THROW(a * b, RingMismatch);
}
