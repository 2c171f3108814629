#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkoszul/errors.hpp"
#include "gkoszul/series_checks.hpp"

using namespace gkoszul;

namespace {

Algebra two_cubes() {
  return build_algebra(make_presentation(101, {"x", "y"}, {"x^3", "y^3"}));
}

Algebra truncation(int e, int t) {
  return build_algebra(make_presentation(101, default_variables(e), {}, t));
}

Algebra compressed(int e, int s, uint32_t seed) {
  ConstructResult r = construct_compressed(e, s, 101, seed);
  REQUIRE(r.alg.has_value());
  return *r.alg;
}

ZSeries series_of(std::vector<int64_t> c) { return ZSeries(std::move(c)); }

}  // namespace

TEST_CASE("golod ring: truncations pass, the complete intersection fails") {
  Algebra q2 = truncation(2, 2);
  InstanceContext c2(q2);
  SeriesCheck g2 = golod_ring_check(c2, 6);
  CHECK(g2.pass);
  CHECK(g2.lhs == series_of({1, 2, 4, 8, 16, 32, 64}));

  Algebra q3 = truncation(2, 3);
  InstanceContext c3(q3);
  SeriesCheck g3 = golod_ring_check(c3, 6);
  CHECK(g3.pass);
  CHECK(g3.lhs == series_of({1, 2, 5, 11, 26, 59, 137}));

  // Complete intersections of codimension 2 are never Golod; the honest
  // series drops below the bound first in homological degree 3.
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  SeriesCheck g = golod_ring_check(ctx, 6);
  CHECK_FALSE(g.pass);
  CHECK(g.lhs == series_of({1, 2, 3, 4, 5, 6, 7}));
  CHECK(g.residual.first_nonzero() == 3);
  CHECK(g.residual[3] == -1);
}

TEST_CASE("golod homomorphisms onto truncations, even socle degree") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  for (int j = 3; j <= 5; ++j) {
    SeriesCheck g = golod_hom_check(ctx, j, 6);
    CAPTURE(j);
    CHECK(g.pass);
  }
  // j = s+1 is the identity of R.
  CHECK(golod_hom_check(ctx, 5, 6).lhs == ctx.poincare_k(6));
  CHECK_THROWS_AS(golod_hom_check(ctx, 1, 6), PreconditionViolated);
  CHECK_THROWS_AS(golod_hom_check(ctx, 6, 6), PreconditionViolated);
}

TEST_CASE("golod homomorphism fails at the midpoint for odd socle degree") {
  Algebra a = compressed(2, 5, 7);
  InstanceContext ctx(a);
  SeriesCheck g3 = golod_hom_check(ctx, 3, 6);
  CHECK_FALSE(g3.pass);
  // The Golod bound dominates coefficientwise, so the residual is <= 0 and
  // first deviates in degree >= 2.
  int fn = g3.residual.first_nonzero();
  CHECK(fn >= 2);
  CHECK(fn <= 6);
  for (int i = 0; i <= 6; ++i) CHECK(g3.residual[i] <= 0);

  CHECK(golod_hom_check(ctx, 4, 6).pass);
  CHECK(golod_hom_check(ctx, 6, 6).pass);
}

TEST_CASE("inertness along the polynomial cover") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  CHECK(inert_check(ctx, module_k(a), 6).pass);
  CHECK(inert_check(ctx, module_quot(a, 2), 6).pass);
  CHECK(inert_check(ctx, module_power(a, 3), 6).pass);

  // m^2 = m^r is not inert here: the residual is z^e (1+z)^{e+1} / d_R.
  SeriesCheck bad = inert_check(ctx, module_power(a, 2), 6);
  CHECK_FALSE(bad.pass);
  CHECK(bad.residual.first_nonzero() == 2);
  CHECK(bad.residual[2] == 1);
  CHECK(bad.residual[3] == 3);

  Algebra other = two_cubes();
  CHECK_THROWS_AS(inert_check(ctx, module_k(other), 6), PreconditionViolated);
}

TEST_CASE("hypersurface transfer divides the polynomial-cover series") {
  Algebra a = compressed(2, 4, 1);
  ZSeries pk = hypersurface_series(module_k(a), 2, 6);
  CHECK(pk == series_of({1, 2, 2, 2, 2, 2, 2}));
  // The series does not depend on the order of the regular element as long
  // as the annihilation hypothesis holds.
  CHECK(hypersurface_series(module_k(a), 3, 6) == pk);
  // m^2 m^3 = m^5 = 0, so m^3 qualifies at t = 3 ...
  CHECK_NOTHROW(hypersurface_series(module_power(a, 3), 3, 6));
  // ... but m^2 and R itself do not.
  CHECK_THROWS_AS(hypersurface_series(module_power(a, 2), 3, 6),
                  HypothesisFailed);
  CHECK_THROWS_AS(hypersurface_series(module_R(a), 3, 6), HypothesisFailed);
  CHECK_THROWS_AS(hypersurface_series(module_k(a), 1, 6),
                  PreconditionViolated);
}

TEST_CASE("poincare series transfer on compressed instances") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  TransferReport rep = compressed_transfer_check(ctx, 6);
  CHECK(rep.pass);
  CHECK(rep.failed.empty());

  Algebra b = compressed(2, 5, 7);
  InstanceContext cb(b);
  CHECK(compressed_transfer_check(cb, 6).pass);

  // (x^3, y^3) has maximal length for its Hilbert bound, so it qualifies.
  Algebra ci = two_cubes();
  InstanceContext cc(ci);
  CHECK(compressed_transfer_check(cc, 6).pass);

  Algebra q3 = truncation(2, 3);
  InstanceContext cq(q3);
  CHECK_THROWS_AS(compressed_transfer_check(cq, 6), PreconditionViolated);
}

TEST_CASE("koszul complex identity on compressed instances") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  SeriesCheck k = koszul_complex_identity(ctx, 6);
  CHECK(k.pass);
  CHECK(k.rhs == series_of({1, 2, 1, 0, 0, 0, 0}));

  Algebra ci = two_cubes();
  InstanceContext cc(ci);
  CHECK(koszul_complex_identity(cc, 6).pass);

  Algebra q3 = truncation(2, 3);
  InstanceContext cq(q3);
  CHECK_THROWS_AS(koszul_complex_identity(cq, 6), PreconditionViolated);
}

TEST_CASE("a-series of the even instances") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  ASeries top = a_series(ctx, 3, 6);
  CHECK(top.series == series_of({0, 0, 1, 0, 2, 0, 3}));
  CHECK(top.nonneg);
  CHECK(a_series(ctx, 2, 6).series.is_zero());
  CHECK(a_series(ctx, 0, 6).series.is_zero());
  CHECK_THROWS_AS(a_series(ctx, -1, 6), PreconditionViolated);
  CHECK_THROWS_AS(a_series(ctx, 5, 6), PreconditionViolated);

  ASeriesIdentities ids = a_series_identities(ctx, 6);
  CHECK(ids.pass);
  CHECK_FALSE(ids.odd_checked);
  CHECK(ids.zz_failed.empty());

  // Same socle data, same closed forms for the deterministic instance.
  Algebra ci = two_cubes();
  InstanceContext cc(ci);
  CHECK(a_series(cc, 3, 6).series == series_of({0, 0, 1, 0, 2, 0, 3}));
  CHECK(a_series_identities(cc, 6).pass);
}

TEST_CASE("a-series identities and nonvanishing, odd socle degree") {
  Algebra b = compressed(2, 5, 7);
  InstanceContext ctx(b);
  ASeriesIdentities ids = a_series_identities(ctx, 6);
  CHECK(ids.pass);
  CHECK(ids.odd_checked);
  CHECK(ids.odd.pass);
  CHECK(ids.zz_failed.empty());

  NonvanishingReport rep = nonvanishing_predictions(ctx, 6);
  CHECK(rep.pass);
  REQUIRE(rep.items.size() == 2);
  CHECK(rep.items[0].j == 3);
  CHECK(rep.items[0].first_nonzero >= 1);
  CHECK(rep.items[0].matches_direct);
  CHECK(rep.items[1].j == 5);
  CHECK(rep.items[1].first_nonzero == 2);
  CHECK(rep.items[1].vanishes_below_e);
  CHECK(rep.items[1].matches_direct);
}

TEST_CASE("nonvanishing on the even instance") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext ctx(a);
  NonvanishingReport rep = nonvanishing_predictions(ctx, 6);
  CHECK(rep.pass);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].j == 4);
  CHECK(rep.items[0].first_nonzero == 2);
  CHECK(rep.items[0].vanishes_below_e);
  CHECK(rep.items[0].matches_direct);
}

TEST_CASE("series checks are deterministic") {
  Algebra a = compressed(2, 4, 1);
  InstanceContext c1(a);
  InstanceContext c2(a);
  CHECK(golod_ring_check(c1, 6).residual.str() ==
        golod_ring_check(c2, 6).residual.str());
  CHECK(a_series(c1, 3, 6).series == a_series(c2, 3, 6).series);
  CHECK(golod_hom_check(c1, 3, 6).lhs == golod_hom_check(c2, 3, 6).lhs);
}
