#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubiclines/ideal.hpp"

using namespace cubiclines;

namespace {

MPoly P(const std::string& s, const VarContext& ctx,
        MonomialOrder o = MonomialOrder::GrevLex) {
  return parse_poly(s, ctx, o);
}

Ideal make_ideal(const VarContext& ctx, MonomialOrder o,
                 const std::vector<std::string>& gens) {
  std::vector<MPoly> ps;
  for (const auto& s : gens) ps.push_back(P(s, ctx, o));
  return Ideal(ctx, o, std::move(ps));
}

FieldElement fe(long n) { return FieldElement(n); }
FieldElement w() { return FieldElement::omega(); }
FieldElement w2() { return w() * w(); }

}  // namespace

TEST_CASE("linear elimination") {
  VarContext ctx({"x", "y"});
  auto gb = groebner(make_ideal(ctx, MonomialOrder::Lex, {"x+y", "x-y"}));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == P("y", ctx, MonomialOrder::Lex));
  CHECK(gb.elements()[1] == P("x", ctx, MonomialOrder::Lex));
}

TEST_CASE("already a basis") {
  VarContext ctx({"x"});
  auto gb = groebner(make_ideal(ctx, MonomialOrder::Lex, {"x^2-1"}));
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == P("x^2-1", ctx, MonomialOrder::Lex));
}

TEST_CASE("partials of the triple-line cubic give a zero-dimensional basis") {
  VarContext ctx({"x0", "x1", "x2", "x3", "x4"});
  auto gb = groebner(make_ideal(
      ctx, MonomialOrder::GrevLex,
      {"x0^2+3*x2^2", "x1^2+3*x3^2", "2*x0*x2", "2*x1*x3", "3*x4^2"}));
  CHECK(is_zero_dimensional(gb));
  CHECK(dimension(gb) == 0);
}

TEST_CASE("normal form") {
  VarContext ctx({"x", "y"});
  auto gb = groebner(make_ideal(ctx, MonomialOrder::Lex, {"x+y", "x-y"}));
  CHECK(normal_form(P("x+y", ctx, MonomialOrder::Lex), gb).is_zero());
  CHECK(normal_form(P("1", ctx, MonomialOrder::Lex), gb) ==
        P("1", ctx, MonomialOrder::Lex));

  // Euler: Fermat F lies in the ideal of its own partials.
  VarContext xs({"x0", "x1", "x2", "x3", "x4"});
  MPoly fermat = P("x0^3+x1^3+x2^3+x3^3+x4^3", xs);
  std::vector<MPoly> partials;
  for (std::size_t i = 0; i < 5; ++i) partials.push_back(fermat.derivative(i));
  auto pgb = groebner(Ideal(xs, MonomialOrder::GrevLex, partials));
  CHECK(normal_form(fermat, pgb).is_zero());
}

TEST_CASE("all s-polynomials of a computed basis reduce to zero") {
  VarContext ctx({"x", "y", "z"});
  auto gb = groebner(make_ideal(ctx, MonomialOrder::GrevLex,
                                {"x^2+y*z-1", "x*z-y", "y^2+x-z"}));
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      CHECK(normal_form(s_polynomial(els[i], els[j]), gb).is_zero());
    }
  }
}

TEST_CASE("reduced basis is canonical under generator shuffles") {
  VarContext ctx({"x0", "x1", "x2", "x3", "x4"});
  std::vector<std::string> gens = {"x0^2+3*x2^2", "x1^2+3*x3^2", "2*x0*x2",
                                   "2*x1*x3", "3*x4^2"};
  auto reference = groebner(make_ideal(ctx, MonomialOrder::GrevLex, gens));
  std::mt19937 rng(99);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto gb = groebner(make_ideal(ctx, MonomialOrder::GrevLex, gens));
    REQUIRE(gb.elements().size() == reference.elements().size());
    for (std::size_t i = 0; i < gb.elements().size(); ++i) {
      CHECK(gb.elements()[i] == reference.elements()[i]);
    }
  }
}

TEST_CASE("dimension examples") {
  VarContext ctx({"x", "y"});
  CHECK(dimension(groebner(make_ideal(ctx, MonomialOrder::GrevLex, {"x", "y"}))) == 0);
  CHECK(dimension(groebner(make_ideal(ctx, MonomialOrder::GrevLex, {"1"}))) == -1);
  CHECK(dimension(groebner(make_ideal(ctx, MonomialOrder::GrevLex, {"x"}))) == 1);
}

TEST_CASE("fermat chart fano ideal has dimension 2") {
  VarContext p({"p02", "p03", "p04", "p12", "p13", "p14"});
  auto gb = groebner(make_ideal(
      p, MonomialOrder::GrevLex,
      {"p12^3+p13^3+p14^3-1", "p02*p12^2+p03*p13^2+p04*p14^2",
       "p02^2*p12+p03^2*p13+p04^2*p14", "p02^3+p03^3+p04^3+1"}));
  CHECK(dimension(gb) == 2);
}

TEST_CASE("unit ideal detection") {
  VarContext ctx({"x"});
  auto gb = groebner(make_ideal(ctx, MonomialOrder::Lex, {"x", "x-1"}));
  CHECK(gb.is_unit_ideal());
}

TEST_CASE("budget errors") {
  VarContext ctx({"x", "y", "z"});
  GBConfig tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(groebner(make_ideal(ctx, MonomialOrder::GrevLex,
                                      {"x^2+y*z-1", "x*z-y", "y^2+x-z"}),
                           tiny),
                  BudgetExceededError);
}

TEST_CASE("univariate roots over Q(w)") {
  VarContext ctx({"x"});

  auto r1 = univariate_roots(P("x^3-1", ctx), FieldTag::QOmega);
  REQUIRE(r1.roots.size() == 3);
  CHECK(!r1.unresolved.has_value());
  std::vector<FieldElement> roots;
  for (auto& [root, mult] : r1.roots) {
    CHECK(mult == 1);
    roots.push_back(root);
  }
  CHECK(std::find(roots.begin(), roots.end(), fe(1)) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), w()) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), w2()) != roots.end());

  auto r2 = univariate_roots(P("x^3+1", ctx), FieldTag::QOmega);
  REQUIRE(r2.roots.size() == 3);
  roots.clear();
  for (auto& [root, mult] : r2.roots) roots.push_back(root);
  CHECK(std::find(roots.begin(), roots.end(), fe(-1)) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), -w()) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), -w2()) != roots.end());

  auto r3 = univariate_roots(P("x^2+x+1", ctx), FieldTag::QOmega);
  REQUIRE(r3.roots.size() == 2);
  CHECK(!r3.unresolved.has_value());

  auto r4 = univariate_roots(P("x^2-2", ctx), FieldTag::QOmega);
  CHECK(r4.roots.empty());
  REQUIRE(r4.unresolved.has_value());
  CHECK(*r4.unresolved == P("x^2-2", ctx));

  // Multiplicity and rational scaling.
  auto r5 = univariate_roots(P("2*x^2-4*x+2", ctx), FieldTag::QOmega);
  REQUIRE(r5.roots.size() == 1);
  CHECK(r5.roots[0].first == fe(1));
  CHECK(r5.roots[0].second == 2);

  // Constant polynomial: no roots.
  auto r6 = univariate_roots(P("5", ctx), FieldTag::QOmega);
  CHECK(r6.roots.empty());
  CHECK(!r6.unresolved.has_value());
}

TEST_CASE("univariate roots over Q") {
  VarContext ctx({"x"});
  auto r = univariate_roots(P("x^3-1", ctx), FieldTag::Q);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].first == fe(1));
  REQUIRE(r.unresolved.has_value());
  CHECK(*r.unresolved == P("x^2+x+1", ctx));

  auto r2 = univariate_roots(P("6*x^2-5*x+1", ctx), FieldTag::Q);
  REQUIRE(r2.roots.size() == 2);
  // Canonical order is lexicographic on (num, den): 1/2 before 1/3.
  CHECK(r2.roots[0].first == FieldElement(make_rational(1, 2)));
  CHECK(r2.roots[1].first == FieldElement(make_rational(1, 3)));
}

TEST_CASE("solve zero dimensional systems") {
  VarContext xy({"x", "y"});
  auto s1 = solve_zero_dim(make_ideal(xy, MonomialOrder::Lex, {"x^2-1", "y-x"}));
  REQUIRE(s1.points.size() == 2);
  CHECK(s1.unresolved.empty());
  CHECK(s1.points[0] == std::vector<FieldElement>{fe(-1), fe(-1)});
  CHECK(s1.points[1] == std::vector<FieldElement>{fe(1), fe(1)});

  VarContext x1({"x"});
  auto s2 = solve_zero_dim(make_ideal(x1, MonomialOrder::Lex, {"x^2+x+1"}));
  REQUIRE(s2.points.size() == 2);

  // A Fermat census subsystem: 9 points.
  VarContext p({"p02", "p03", "p04", "p12", "p13", "p14"});
  auto s3 = solve_zero_dim(make_ideal(
      p, MonomialOrder::Lex, {"p03^3+1", "p12^3-1", "p02", "p04", "p13", "p14"}));
  CHECK(s3.points.size() == 9);
  CHECK(s3.unresolved.empty());

  // Not zero-dimensional.
  CHECK_THROWS_AS(solve_zero_dim(make_ideal(xy, MonomialOrder::Lex, {"x"})),
                  NotZeroDimensionalError);

  // Empty variety.
  auto s4 = solve_zero_dim(make_ideal(xy, MonomialOrder::Lex, {"x", "x-1"}));
  CHECK(s4.points.empty());
  CHECK(s4.unresolved.empty());

  // Unresolved branches are reported, resolved points still found.
  auto s5 = solve_zero_dim(
      make_ideal(xy, MonomialOrder::Lex, {"x^3-2*x^2-x+2", "y^2-1"}),
      FieldTag::Q);
  CHECK(s5.points.size() == 6);  // x in {1,-1,2}, y in {1,-1}
  CHECK(s5.unresolved.empty());
}

TEST_CASE("solutions satisfy every generator exactly") {
  VarContext ctx({"x", "y", "z"});
  auto ideal = make_ideal(ctx, MonomialOrder::Lex,
                          {"x^2-y", "y^2-z", "z^3-1"});
  auto sol = solve_zero_dim(ideal);
  CHECK(!sol.points.empty());
  for (const auto& pt : sol.points) {
    for (const auto& g : ideal.generators) {
      CHECK(g.evaluate(pt).is_zero());
    }
  }
}

TEST_CASE("staircase count matches solution multiplicities on small instances") {
  VarContext xy({"x", "y"});
  VarContext x1({"x"});

  // Radical with two simple points.
  auto i1 = make_ideal(xy, MonomialOrder::Lex, {"x^2-1", "y-x"});
  CHECK(staircase_size(groebner(i1)) == 2);
  CHECK(solve_zero_dim(i1).points.size() == 2);

  // Pure power: one point of multiplicity 3.
  auto i2 = make_ideal(x1, MonomialOrder::Lex, {"x^3"});
  CHECK(staircase_size(groebner(i2)) == 3);
  auto r2 = univariate_roots(P("x^3", x1, MonomialOrder::Lex), FieldTag::QOmega);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0].second == 3);

  // Defining relation of omega.
  auto i3 = make_ideal(x1, MonomialOrder::Lex, {"x^2+x+1"});
  CHECK(staircase_size(groebner(i3)) == 2);
  CHECK(solve_zero_dim(i3).points.size() == 2);

  // Radical product system: four simple points.
  auto i4 = make_ideal(xy, MonomialOrder::Lex, {"x^2-x", "y^2-y"});
  CHECK(staircase_size(groebner(i4)) == 4);
  CHECK(solve_zero_dim(i4).points.size() == 4);
}
