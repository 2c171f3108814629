#pragma once

#include <cstdint>
#include <vector>

#include "gkoszul/algebra.hpp"
#include "gkoszul/matrix.hpp"
#include "gkoszul/resolution.hpp"

namespace gkoszul {

// A surjection of algebras over the same variables, sending each basis
// element of the source to its normal form in the target (column i of rho).
struct RingMap {
  const Algebra* from = nullptr;
  const Algebra* to = nullptr;
  Mat rho;
};

// Builds the map for a quotient: every relation of A must hold in B.
// Throws NotEquivariant if the basis images fail to commute with the
// variable actions (i.e. B is not a quotient of A).
RingMap quotient_ring_map(const Algebra& A, const Algebra& B);

// A lift of the identity of the residue field along a ring surjection to a
// chain map between the minimal k-resolutions, with the induced matrices
// Tor_i(k,k)_from -> Tor_i(k,k)_to read off the unit coordinates.
struct KLift {
  std::vector<std::vector<std::vector<uint32_t>>> phi;  // phi[i][h]
  std::vector<Mat> tor;                                 // tor[0..depth]
};
KLift lift_k(const RingMap& rho, const MinimalResolution& RF,
             const MinimalResolution& RG, int depth);

// Injectivity of Tor_i(k,k) -> Tor_i(k,k) over the quotient by the j-th
// power of the maximal ideal, for i = 0..depth (2 <= j <= s+1).  ranks[i]
// is the computed rank; failed lists the i where injectivity breaks.
struct SmallCheck {
  bool small = true;
  std::vector<int> failed;
  std::vector<int64_t> ranks;
};
SmallCheck small_check(const Algebra& A, int j, int depth);

// Same check reusing the context's cached resolutions (and caching the
// truncation's own resolution for later calls).
class InstanceContext;
SmallCheck small_check(InstanceContext& ctx, int j, int depth);

// Surjectivity of the degree-2 cohomology inflation from the quotient by
// the t-th power: equivalent to injectivity of Tor_2 of the projection.
bool ext2_surjectivity(const Algebra& A, int t);

}  // namespace gkoszul
