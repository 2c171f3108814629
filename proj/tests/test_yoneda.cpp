#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkoszul/algebra.hpp"
#include "gkoszul/cache.hpp"
#include "gkoszul/errors.hpp"
#include "gkoszul/yoneda.hpp"

using namespace gkoszul;

namespace {

Algebra from(std::vector<std::string> vars, std::vector<std::string> gens) {
  return build_algebra(make_presentation(101, vars, gens));
}

}  // namespace

TEST_CASE("hypersurface k[x]/(x^2) is generated in degree one") {
  Algebra a = from({"x"}, {"x^2"});
  InstanceContext ctx(a);
  ExtGeneration g = ext_generated_by(ctx, 1, 5);
  CHECK(g.generated);
  CHECK(g.first_gap == -1);
  std::vector<int64_t> ones(6, 1);
  CHECK(g.betti == ones);
  CHECK(g.subdim == ones);
  CHECK(is_k1(ctx, 5));
}

TEST_CASE("hypersurface k[x]/(x^3) needs the degree-two class") {
  Algebra a = from({"x"}, {"x^3"});
  InstanceContext ctx(a);
  // The square of the degree-one class vanishes, so generation by degree
  // one collapses after degree 1; adding the degree-two class restores
  // everything (the resolution is two-periodic).
  ExtGeneration g1 = ext_generated_by(ctx, 1, 5);
  CHECK_FALSE(g1.generated);
  CHECK(g1.first_gap == 2);
  std::vector<int64_t> want = {1, 1, 0, 0, 0, 0};
  CHECK(g1.subdim == want);
  ExtGeneration g2 = ext_generated_by(ctx, 2, 5);
  CHECK(g2.generated);
  CHECK(is_k2(ctx, 5));
  CHECK_FALSE(is_k1(ctx, 5));
}

TEST_CASE("quadratic truncation has a free cohomology algebra") {
  // All 2^n word products stay independent, so the degree-one classes
  // generate and every product rank is exact.
  Algebra a = build_algebra(make_presentation(101, {"x", "y"}, {}, 2));
  InstanceContext ctx(a);
  ExtGeneration g = ext_generated_by(ctx, 1, 6);
  CHECK(g.generated);
  for (int i = 0; i <= 6; ++i) CHECK(g.subdim[i] == (int64_t{1} << i));
  CHECK(g.subdim == g.betti);
}

TEST_CASE("two cubics: exterior collapse in degree one, recovery with two") {
  Algebra a = from({"x", "y"}, {"x^3", "y^3"});
  InstanceContext ctx(a);
  // Degree-one classes anticommute with vanishing squares, so their
  // products span only a 1-dimensional piece of the 3-dimensional degree
  // 2; nothing survives in degree 3.
  ExtGeneration g1 = ext_generated_by(ctx, 1, 4);
  std::vector<int64_t> want = {1, 2, 1, 0, 0};
  CHECK(g1.subdim == want);
  CHECK(g1.first_gap == 2);
  // A complete intersection is recovered by degrees one and two.
  ExtGeneration g2 = ext_generated_by(ctx, 2, 6);
  CHECK(g2.generated);
  CHECK(g2.subdim == g2.betti);
}

TEST_CASE("cubic truncation is generated in degrees one and two") {
  Algebra a = build_algebra(make_presentation(101, {"x", "y"}, {}, 3));
  InstanceContext ctx(a);
  CHECK_FALSE(is_k1(ctx, 5));
  CHECK(is_k2(ctx, 5));
}

TEST_CASE("compressed gorenstein e=2 s=4 behaves as a complete intersection") {
  ConstructResult r = construct_compressed(2, 4, 101, 1);
  REQUIRE(r.alg.has_value());
  InstanceContext ctx(*r.alg);
  ExtGeneration g = ext_generated_by(ctx, 2, 5);
  CHECK(g.generated);
  for (int i = 0; i <= 5; ++i) CHECK(g.betti[i] == i + 1);
  CHECK_FALSE(is_k1(ctx, 4));
}

TEST_CASE("non-graded ring runs through the full-coordinate path") {
  Algebra a = from({"x", "y"}, {"x^2+y^3", "x*y"});
  REQUIRE_FALSE(a.graded);
  InstanceContext ctx(a);
  ExtGeneration g1 = ext_generated_by(ctx, 1, 4);
  ExtGeneration g2 = ext_generated_by(ctx, 2, 4);
  for (int i = 0; i <= 4; ++i) {
    CHECK(g1.subdim[i] <= g2.subdim[i]);
    CHECK(g2.subdim[i] <= g2.betti[i]);
  }
  CHECK(g1.subdim[0] == 1);
  CHECK(g1.subdim[1] == g1.betti[1]);
}

TEST_CASE("generation dimensions are deterministic") {
  Algebra a = from({"x", "y"}, {"x^3", "y^3"});
  InstanceContext ctx(a);
  ExtGeneration g1 = ext_generated_by(ctx, 2, 5);
  ExtGeneration g2 = ext_generated_by(ctx, 2, 5);
  CHECK(g1.subdim == g2.subdim);
  CHECK(g1.betti == g2.betti);
}

TEST_CASE("guards") {
  Algebra a = from({"x"}, {"x^2"});
  InstanceContext ctx(a);
  CHECK_THROWS_AS(ext_generated_by(ctx, 0, 3), PreconditionViolated);
  CHECK_THROWS_AS(ext_generated_by(ctx, 3, 3), PreconditionViolated);
  CHECK_THROWS_AS(ext_generated_by(ctx, 2, -1), PreconditionViolated);
}
