#include <gtest/gtest.h>

#include "sgq/errors.hpp"
#include "sgq/json_io.hpp"
#include "sgq/random.hpp"
#include "support.hpp"

using namespace sgq;
using nlohmann::json;
using sgq::testing::k;
using sgq::testing::th;

TEST(JsonIo, ElementEncoding) {
  auto R = SuperRingSpec({"x"}, {"th1", "th2"});
  auto e = k(R, 3, 2) * SuperElement::variable(R, "x") * th(R, 2) + Gaussian(0, 1) * th(R, 1) * th(R, 2);
  json j = io::to_json(e);
  EXPECT_EQ(j["ring"]["odd"], json({"th1", "th2"}));
  EXPECT_EQ(j["terms"][0]["coeff"]["re"], "3/2");
  EXPECT_EQ(j["terms"][0]["odd"], json({1}));
  EXPECT_EQ(j["terms"][1]["coeff"]["im"], "1/1");
  EXPECT_EQ(io::element_from_json(j), e);
}

TEST(JsonIo, RejectsMalformedTerms) {
  json ring = {{"even", json::array()}, {"odd", {"a", "b"}}};
  json bad_order = {{"ring", ring}, {"terms", {{{"coeff", "1"}, {"odd", {1, 0}}}}}};
  EXPECT_THROW(io::element_from_json(bad_order), io::SchemaError);
  json out_of_range = {{"ring", ring}, {"terms", {{{"coeff", "1"}, {"odd", {2}}}}}};
  EXPECT_THROW(io::element_from_json(out_of_range), io::SchemaError);
  json float_coeff = {{"ring", ring}, {"terms", {{{"coeff", {{"re", "0.5"}}}, {"odd", json::array()}}}}};
  EXPECT_THROW(io::element_from_json(float_coeff), io::SchemaError);
  json missing = {{"ring", ring}};
  EXPECT_THROW(io::element_from_json(missing), io::SchemaError);
}

TEST(JsonIo, MatrixPatternIsValidated) {
  auto R = grassmann_ring(1);
  json j = io::to_json(sgq::testing::square(R, 1, 1, {{k(R, 1), th(R, 1)}, {k(R, 0), k(R, 1)}}));
  j["entries"][0][0] = io::to_json(th(R, 1));
  EXPECT_THROW(io::matrix_from_json(j), ParityPatternViolation);
}

TEST(JsonIo, RoundTripIsByteStable) {
  auto R = grassmann_ring(4);
  BlockProfile bp(3, 2, 2, 1);
  for (std::uint64_t t = 0; t < 20; ++t) {
    gen::Rng rng(8, 0, t);
    auto g = gen::invertible(rng, R, 3, 2, gen::Bounds{});
    std::string once = io::to_json(g).dump();
    EXPECT_EQ(io::to_json(io::matrix_from_json(json::parse(once))).dump(), once);

    auto n = gen::ncoordinates(rng, R, bp, gen::Bounds{});
    std::string coords = io::to_json(n).dump();
    EXPECT_EQ(io::to_json(io::ncoords_from_json(json::parse(coords), bp)).dump(), coords);

    auto pt = orbit_map(g, bp);
    std::string point = io::to_json(pt).dump();
    EXPECT_EQ(io::to_json(io::point_from_json(json::parse(point))).dump(), point);
  }
}

TEST(JsonIo, PresentationAndPoint) {
  auto pres = gl_presentation(1, 1);
  std::string text = io::to_json(pres).dump();
  EXPECT_EQ(io::to_json(io::presentation_from_json(json::parse(text))).dump(), text);
  auto pt = gl_identity_point(1, 1);
  std::string ptext = io::to_json(pt).dump();
  EXPECT_EQ(io::to_json(io::rational_point_from_json(json::parse(ptext))).dump(), ptext);
  json complex_value = {{"values", {{"x", {{"re", "1/2"}, {"im", "-3/1"}}}}}};
  EXPECT_EQ(io::rational_point_from_json(complex_value).values.at("x"), Gaussian(mpq_class(1, 2), mpq_class(-3)));
}

TEST(JsonIo, EmptyBlocksBorrowRing) {
  auto R = grassmann_ring(2);
  BlockProfile bp(1, 1, 1, 0);  // u, eta, v empty
  auto z = NCoordinates::zero(bp, R);
  NCoordinates n(bp, z.u(), z.eta(), sm_validate(R, NCoordinates::xi_shape(bp), {{th(R, 2)}}), z.v());
  EXPECT_EQ(io::ncoords_from_json(io::to_json(n), bp), n);
}
