#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gkoszul/cache.hpp"
#include "gkoszul/series.hpp"

namespace gkoszul {

// Rank identity relating the inclusions nu_j: m^j -> m^(j-1) and the
// projections eta_j: R/m^j -> R/m^(j-1).  The connecting isomorphisms of
// the sequences 0 -> m^n -> R -> R/m^n -> 0 force
//     rank Tor_i(nu_j) == rank Tor_{i+1}(eta_j)   for all i >= 0,
// over any artinian local ring.  Checked for 2 <= j <= s+1, 0 <= i <= top.
struct DualityReport {
  bool pass = true;
  std::vector<std::array<int, 2>> failed;  // (j, i) where the ranks differ
};
DualityReport power_quotient_duality(InstanceContext& ctx, int top);

// Hilbert series of the image of Tor(nu_{j+1}), computed directly:
// coefficient i is rank Tor_i(nu_{j+1}).
ZSeries nu_image_series(InstanceContext& ctx, int j, int top);

// The bookkeeping identity for M = m^j (j >= 0, where m^0 = R):
//     P_M - a_j P_k + z P_{mM} == (1+z) * nu_image_series(j)
// with a_j = rank(M/mM).  Exact coefficientwise comparison through z^top.
bool power_poincare_identity(InstanceContext& ctx, int j, int top);

// The long-exact-sequence recurrence for rank Tor_i(nu_j), from Betti
// numbers alone; must agree with the directly computed ranks.
bool nu_les_consistent(InstanceContext& ctx, int j, int top);

// Whether every generator of the i-th free module of the k-resolution
// sits in internal degree i, for i = 0..depth (graded rings only).
bool koszul_linearity(InstanceContext& ctx, int depth);

}  // namespace gkoszul
