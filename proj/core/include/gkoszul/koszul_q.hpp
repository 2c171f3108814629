#pragma once

#include <cstdint>
#include <vector>

#include "gkoszul/algebra.hpp"
#include "gkoszul/filtered_module.hpp"
#include "gkoszul/matrix.hpp"
#include "gkoszul/series.hpp"

namespace gkoszul {

// A finite-dimensional module over the ambient polynomial ring Q, given by
// commuting nilpotent actions of the e variables on level-sorted coordinates.
// This is the input shape for the Koszul complex: unlike FModule it does not
// need an Algebra behind it, so quotients of Q that are not algebras we built
// (like n^j / n^N) fit too.
struct VarModule {
  int e = 0;
  int n = 0;
  bool graded = false;          // actions raise lvl by exactly 1
  std::vector<int> lvl;         // ascending, size n
  std::vector<Mat> x;           // e matrices, n x n

  int loff(int d) const;        // first index with lvl >= d
  int ldim(int d) const;        // number of coordinates at level d
};

// Reinterpret a module over R as a module over Q (same actions).
VarModule var_module(const FModule& M);

// The Q-module n^j / n^N on the basis of monomials of degrees j .. N-1
// (canonical order within each degree, degrees ascending), with lvl = degree.
// Requires 0 <= j < N.
VarModule truncated_power_vm(int e, int j, int N);

// Ranks of the Koszul homology H_i(K(x_1,...,x_e) otimes M) for i = 0..e,
// which compute rank Tor^Q_i(M, k) when M is a Q-module.
//
// The differential sends e_S (x) m to sum_l (-1)^l e_{S \ u_l} (x) x_{u_l} m,
// where S = {u_0 < u_1 < ...}.  Basis of K_i: subsets in lexicographic order,
// within a subset the module coordinates; column id = subset_idx * n + m.
//
// cutoff >= 0 (graded modules only): homology is computed per internal degree
// (internal degree of e_S (x) m is |S| + lvl(m)) and summed over degrees
// < cutoff.  This discards the spurious classes a truncation n^j / n^N
// introduces, which all live in internal degrees >= N.
std::vector<int64_t> koszul_ranks(const VarModule& M, const Fp& F,
                                  int cutoff = -1);

// rank Tor^Q_i(M, k) for i = 0..e, and the same as a series (coefficients
// beyond z^e are zero).
std::vector<int64_t> tor_q(const FModule& M);
ZSeries tor_q_series(const FModule& M, int order);

// Ranks of the induced maps Tor^Q_i(f, k) : Tor^Q_i(M,k) -> Tor^Q_i(N,k)
// for i = 0..e.  Throws NotEquivariant if f does not commute with the
// variable actions.
std::vector<int64_t> tor_q_map(const ModuleMap& f);

// Coefficients 0..order-1 of the Poincare series of the ideal n^j of Q
// itself (an infinite-dimensional Q-module), obtained from n^j / n^N for a
// sufficiently high N with the internal-degree filter: the true classes of
// Tor_i(n^j) sit in internal degree j + i, the truncation junk in degrees
// >= N.  Requires j >= 1.
ZSeries power_ideal_q_series(int e, int j, int order, const Fp& F);

// The series 1 - z * (P^Q_R(z) - 1) + z^{e+1} * (1 + z), the common
// denominator of the Poincare series over a compressed Gorenstein algebra
// that is not a complete intersection.
ZSeries d_R_series(const Algebra& A, int order);

// Exact identities between the Q-side Poincare series of the powers m^j of
// a compressed algebra with one-dimensional socle, socle degree s >= 2 and
// s != 3:
//
//   splitting (1 <= j <= t-1):  P^Q_{m^j} = P^Q_R + P^Q_{n^j} - 1,
//   socle     (r <= j <= s-1):  P^Q_{m^j} - a_j P^Q_k + z P^Q_{m^{j+1}}
//                               = (1 + z) z^e,
//
// where t = floor((s+2)/2) and r = s+1-t.  At j = s both sides of the socle
// identity collapse: m^s is the socle, so the left side is identically zero,
// and that degenerate form is what is verified there.
struct QPowerIdentities {
  bool pass = true;
  std::vector<int> failed_split;   // j with the splitting identity violated
  std::vector<int> failed_socle;   // j with the socle identity violated
};
QPowerIdentities q_power_identities(const Algebra& A);

}  // namespace gkoszul
