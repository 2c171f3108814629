#pragma once
// Series-level tests.  Each check compares two exactly computed integer
// power series up to a caller-chosen order; there are no tolerances, a
// check passes iff every coefficient agrees.  The left side is always the
// "honest" quantity (Betti numbers read off actual resolutions) and the
// right side the closed form it is being tested against.

#include <string>
#include <vector>

#include "gkoszul/cache.hpp"
#include "gkoszul/koszul_q.hpp"

namespace gkoszul {

struct SeriesCheck {
  bool pass = false;
  ZSeries lhs;
  ZSeries rhs;
  ZSeries residual;  // lhs - rhs, zero iff pass
};

// Golod test for the projection R -> R/m^j, 2 <= j <= s+1: the Poincare
// series of k over R/m^j (resolved over R/m^j itself) against the Golod
// bound P^R_k / (1 - z (P^R_{R/m^j} - 1)).  The bound is an upper bound
// coefficientwise; equality up to the order is the Golod property to that
// depth.  j = s+1 is the identity map and passes trivially.
SeriesCheck golod_hom_check(InstanceContext& ctx, int j, int order);

// Golod test for the ring itself: P^R_k against
// (1+z)^e / (1 - z (P^Q_R - 1)), with the numerator data computed on the
// Koszul complex side.
SeriesCheck golod_ring_check(InstanceContext& ctx, int order);

// Inertness of the R-module m along the surjection from the ambient
// polynomial ring: P^R_k * P^Q_m == (1+z)^e * P^R_m.  The module must
// belong to ctx's algebra.
SeriesCheck inert_check(InstanceContext& ctx, const FModule& m, int order);

// Poincare series of m over the hypersurface Q/(h) for any Q-regular h of
// order t >= 2, computed as P^Q_m / (1 - z^2).  Valid only when m is
// annihilated by the (t-1)-st power of the maximal ideal, which makes the
// series independent of the choice of h; throws HypothesisFailed when the
// annihilation test fails.
ZSeries hypersurface_series(const FModule& m, int t, int order);

// P^R_k * d_R == (1+z)^e for the degree-(e+2) denominator polynomial d_R.
// Only asserted for compressed Gorenstein algebras with 2 <= s != 3
// (PreconditionViolated otherwise).
SeriesCheck koszul_complex_identity(InstanceContext& ctx, int order);

// Transfer of Poincare series between R and the polynomial ring for a
// compressed Gorenstein algebra with 2 <= s != 3.  Verifies, with
// t = t_of_socle(s) and r = r_of_socle(s):
//   P^R_{R/m^j} * d_R == P^Q_{R/m^j}                 for 1 <= j <= t-1,
//   P^R_{m^j}   * d_R == P^Q_{m^j}                   for r+1 <= j <= s+1,
//   P^R_{m^j}   * d_R == P^Q_{m^j} - z^e (1+z)       for 1 <= j <= r.
struct TransferReport {
  bool pass = true;
  std::vector<std::string> failed;  // e.g. "quot j=2", "power j=4"
};
TransferReport compressed_transfer_check(InstanceContext& ctx, int order);

// The alternating series (z P^R_{m^{j+1}} - a_j P^R_k + P^R_{m^j}) / (1+z)
// for 0 <= j <= s, where a_j = dim m^j/m^{j+1}.  Its i-th coefficient is
// the rank of Tor_i of the inclusion m^{j+1} -> m^j, so all coefficients
// are nonnegative; `nonneg` reports that sanity verdict.
struct ASeries {
  ZSeries series;
  bool nonneg = false;
};
ASeries a_series(InstanceContext& ctx, int j, int order);

// Same series with every Poincare series taken over the polynomial ring.
ASeries a_series_q(const Algebra& a, int j, int order);

// The two closed forms the A-series of a compressed Gorenstein algebra
// (2 <= s != 3) satisfies:
//   odd s:            A^R_{m^{t-1}} * d_R == A^Q_{m^{t-1}} - z^e (1+z),
//   r+2 <= j <= s:    A^R_{m^{j-1}} * d_R == z^e.
struct ASeriesIdentities {
  bool pass = true;
  bool odd_checked = false;   // the odd-s identity applied to this algebra
  SeriesCheck odd;            // meaningful iff odd_checked
  std::vector<int> zz_failed;  // the j in [r+2, s] whose identity failed
};
ASeriesIdentities a_series_identities(InstanceContext& ctx, int order);

// Vanishing / nonvanishing predictions for Tor(nu_j) on a compressed
// Gorenstein algebra (2 <= s != 3), checked against both the A-series and
// the directly computed ranks of Tor_i of the inclusions:
//   odd s:          Tor_i(nu_t) != 0 for some i <= depth,
//   r+2 <= j <= s:  Tor_i(nu_j) == 0 for i < e and != 0 for some
//                   i in [e, depth].
// A failed odd-s item means "no nonzero rank found within depth", which a
// caller may treat as undetected rather than refuted.
struct NonvanishingItem {
  int j = 0;                     // the inclusion nu_j under test
  int first_nonzero = -1;        // of the A-series of m^{j-1}
  bool vanishes_below_e = true;  // only constrained for the j >= r+2 items
  bool matches_direct = false;   // A-series == direct Tor ranks of nu_j
  bool pass = false;
};
struct NonvanishingReport {
  bool pass = true;
  std::vector<NonvanishingItem> items;
};
NonvanishingReport nonvanishing_predictions(InstanceContext& ctx, int depth);

}  // namespace gkoszul
