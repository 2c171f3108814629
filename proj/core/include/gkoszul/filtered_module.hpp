#pragma once

#include <string>
#include <vector>

#include "gkoszul/algebra.hpp"
#include "gkoszul/matrix.hpp"

namespace gkoszul {

// A finite module over an Algebra, described by coordinates compatible with
// the m-adic filtration: coordinate i lives at level lvl[i] (ascending), and
// every variable action raises the level.  When the algebra is graded the
// actions are exact of degree one, which downstream machinery exploits; in
// general they only respect the filtration.
struct FModule {
  const Algebra* A = nullptr;
  std::string label;
  int n = 0;
  bool graded = false;
  std::vector<int> lvl;   // ascending
  std::vector<Mat> act;   // one n x n action per variable

  // First coordinate of level >= d / number of coordinates at level d.
  int loff(int d) const;
  int ldim(int d) const;

  // Action of the c-th basis monomial of the algebra (lazily cached).
  const Mat& act_bas(int c) const;

  mutable std::vector<Mat> act_bas_cache_;
  mutable std::vector<char> act_bas_have_;
};

FModule module_k(const Algebra& A);
FModule module_R(const Algebra& A);
// m^j as the span of the basis elements of degree >= j; 0 <= j <= s+1
// (m^{s+1} is the zero module).
FModule module_power(const Algebra& A, int j);
// R/m^j on the basis elements of degree < j; 0 <= j <= s+1 (R/m^0 is zero).
FModule module_quot(const Algebra& A, int j);

// A homomorphism of modules over the same algebra, as a matrix on the chosen
// coordinates (f is to.n x from.n).
struct ModuleMap {
  FModule from;
  FModule to;
  Mat f;
};

// The inclusion m^j -> m^{j-1} and the projection R/m^j -> R/m^{j-1},
// for 1 <= j <= s+1.
ModuleMap nu_inclusion(const Algebra& A, int j);
ModuleMap eta_projection(const Algebra& A, int j);

bool is_equivariant(const ModuleMap& f);
void require_equivariant(const ModuleMap& f);

}  // namespace gkoszul
