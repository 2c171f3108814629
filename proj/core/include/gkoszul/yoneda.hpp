#pragma once

#include <cstdint>
#include <vector>

#include "gkoszul/cache.hpp"

namespace gkoszul {

// Dimensions of the subalgebra of the cohomology algebra of the residue
// field generated by all classes of degree <= maxdeg, compared with the
// full dimensions b_n, for n = 0..depth.  Products are computed by
// composing chain-map lifts of dual-basis classes along the minimal free
// resolution of k, so every dimension is exact.
struct ExtGeneration {
  std::vector<int64_t> subdim;
  std::vector<int64_t> betti;
  bool generated = true;
  int first_gap = -1;  // least n with subdim[n] < betti[n], or -1
};

// maxdeg must be 1 or 2.
ExtGeneration ext_generated_by(InstanceContext& ctx, int maxdeg, int depth);

// Generation by degree 1 alone, and by degrees 1 and 2 together.
bool is_k1(InstanceContext& ctx, int depth);
bool is_k2(InstanceContext& ctx, int depth);

}  // namespace gkoszul
