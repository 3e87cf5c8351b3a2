#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace cubiclines;
using namespace cubiclines::testutil;

TEST_CASE("cubic validation") {
  CHECK_THROWS_AS(cubic("x0^2"), InvalidInputError);
  CHECK_THROWS_AS(cubic("x0^3 + x1"), InvalidInputError);
  CHECK_THROWS_AS(cubic("0"), InvalidInputError);
  CHECK(fermat().field() == FieldTag::Q);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(fermat()));
  CHECK(!is_smooth(cubic("x0^3")));
  CHECK(is_smooth(triple_fixture()));
  CHECK(is_smooth(double_fixture()));
  CHECK(!is_smooth(cubic("x0*x1*x2")));
}

TEST_CASE("smoothness is invariant under linear changes of variables") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int k = 0; k < 8; ++k) {
    FMat m(5, FVec(5));
    do {
      for (auto& row : m) {
        for (auto& x : row) x = fe(d(rng));
      }
    } while (det(m).is_zero());
    ProjectiveTransform g{m};
    CHECK(is_smooth(apply_transform(fermat(), g)));
    CHECK(!is_smooth(apply_transform(cubic("x0^3"), g)));
  }
}

TEST_CASE("singular witness") {
  // x0^3 is singular along {x0 = 0}; a witness has x0 = 0.
  auto w = singular_witness(cubic("x0^3"));
  REQUIRE(w.has_value());
  CHECK((*w)[0].is_zero());
  CHECK(!singular_witness(fermat()).has_value());
}

TEST_CASE("line containment") {
  LineSpan on_fermat(vec5({1, 0, -1, 0, 0}), vec5({0, 1, 0, -1, 0}));
  CHECK(contains_line(fermat(), on_fermat));
  CHECK(!contains_line(fermat(), standard_line()));
  CHECK(contains_line(triple_fixture(), standard_line()));
}

TEST_CASE("standardize moves the line to the standard position") {
  LineSpan l(vec5({1, 0, -1, 0, 0}), vec5({0, 1, 0, -1, 0}));
  Standardized s = standardize(fermat(), l);
  CHECK(contains_line(s.cubic, standard_line()));
  // Defining property: the transform maps span(e0, e1) to the line.
  FVec im0 = apply_to_point(s.transform, vec5({1, 0, 0, 0, 0}));
  FVec im1 = apply_to_point(s.transform, vec5({0, 1, 0, 0, 0}));
  CHECK(same_line(LineSpan(im0, im1), l));

  // Already standard: identity.
  Standardized id = standardize(triple_fixture(), standard_line());
  CHECK(id.transform.matrix == identity_matrix(5));
  CHECK(id.cubic.poly() == triple_fixture().poly());
}

TEST_CASE("standardized cubic vanishes on the standard line") {
  std::mt19937 rng(17);
  for (int k = 0; k < 20; ++k) {
    CubicThreefold x = random_cubic_through_standard_line(rng);
    // Move the standard line somewhere else by a random transform, then
    // standardize back.
    std::uniform_int_distribution<long> d(-2, 2);
    FMat m(5, FVec(5));
    do {
      for (auto& row : m) {
        for (auto& e : row) e = fe(d(rng));
      }
    } while (det(m).is_zero());
    ProjectiveTransform g{m};
    CubicThreefold moved = apply_transform(x, g);
    FMat inv = mat_inverse(m);
    FVec w0 = mat_vec(inv, vec5({1, 0, 0, 0, 0}));
    FVec w1 = mat_vec(inv, vec5({0, 1, 0, 0, 0}));
    LineSpan moved_line(w0, w1);
    REQUIRE(contains_line(moved, moved_line));
    Standardized s = standardize(moved, moved_line);
    CHECK(contains_line(s.cubic, standard_line()));
  }
}
