#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkoszul/algebra.hpp"
#include "gkoszul/filtered_module.hpp"
#include "gkoszul/matrix.hpp"
#include "gkoszul/series.hpp"

namespace gkoszul {

// Rank and internal generator degrees of one free module in a resolution.
struct FreeMod {
  std::vector<int> gdeg;  // one entry per generator; identically 0 when the
                          // resolution is not graded
  int rank() const { return static_cast<int>(gdeg.size()); }
};

// Layout of a homogeneous slice of a free module: one contiguous segment of
// coordinates per generator.
struct Segment {
  int off = 0;
  int len = 0;
};
struct PieceLayout {
  std::vector<Segment> seg;
  int dim = 0;
};

// A minimal free resolution F_depth -> ... -> F_1 -> F_0 -> M of a module
// over the algebra, built degree by degree.
//
// Graded input: the differential is stored per generator as a homogeneous
// element, img[i][h] = coordinates of d_i(e_h) in the degree-gdeg[i][h]
// slice of F_{i-1} (layout res_piece(i-1, gdeg[i][h])); aug[h] likewise in
// the level-gdeg[0][h] slice of M.  Ungraded input: gdeg is zero, img[i][h]
// holds full coordinates (rank_{i-1} consecutive copies of the algebra) and
// aug[h] full module coordinates.
struct MinimalResolution {
  const Algebra* A = nullptr;
  std::string label;  // label of the resolved module
  bool graded = false;
  FModule target;     // the resolved module
  std::vector<FreeMod> f;                               // f[0..depth]
  std::vector<std::vector<uint32_t>> aug;               // level-0 images
  std::vector<std::vector<std::vector<uint32_t>>> img;  // img[i], i >= 1

  int depth() const { return static_cast<int>(f.size()) - 1; }
  std::vector<int64_t> betti() const;
};

// Resolve minimally to the given depth (f[0..depth] and the differentials
// between them).  Works for any module, including zero and free ones.
MinimalResolution resolve_module(const FModule& M, int depth);

// Layout of the degree-d slice of F_i (graded resolutions): segment h has
// length adim(d - gdeg[i][h]).
PieceLayout res_piece(const MinimalResolution& R, int i, int d);

// w: coordinates in res_piece(R, i, dsrc).  Returns basis[c] * w as
// coordinates in res_piece(R, i, dsrc + deg basis[c]).
std::vector<uint32_t> piece_mult(const MinimalResolution& R, int i,
                                 const std::vector<uint32_t>& w, int dsrc,
                                 int c);

// w: full coordinates on F_i (rank * n entries).  Returns basis[c] * w.
std::vector<uint32_t> full_mult(const MinimalResolution& R, int i,
                                const std::vector<uint32_t>& w, int c);

// Transient matrices.  Block forms address homogeneous slices of a graded
// resolution; full forms address the whole free modules (columns are pairs
// (generator, algebra basis element), rows likewise or module coordinates).
Mat diff_block(const MinimalResolution& R, int i, int d);
Mat aug_block(const MinimalResolution& R, int d);
Mat diff_full(const MinimalResolution& R, int i);
Mat aug_full(const MinimalResolution& R);

// The exact Betti numbers as a series; order must not exceed the depth.
ZSeries betti_series(const MinimalResolution& R, int order);

// rank Tor_i(M, k) for i = 0..top, computed as homology of F (x) M where F
// resolves k (or rank of the maps Tor_i(g) induced by a module map g).
// Needs depth(F) >= top + 1; the map version needs equivariant g.
std::vector<int64_t> tensor_homology(const MinimalResolution& F,
                                     const FModule& M, int top);
std::vector<int64_t> tensor_homology_map(const MinimalResolution& F,
                                         const ModuleMap& g, int top);

// Poincare series of M to the given order via tensor_homology.
ZSeries poincare_series(const MinimalResolution& F, const FModule& M,
                        int order);

}  // namespace gkoszul
