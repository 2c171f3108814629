#include "gkoszul/filtered_module.hpp"

#include <algorithm>

#include "gkoszul/errors.hpp"

namespace gkoszul {

int FModule::loff(int d) const {
  return static_cast<int>(
      std::lower_bound(lvl.begin(), lvl.end(), d) - lvl.begin());
}

int FModule::ldim(int d) const { return loff(d + 1) - loff(d); }

const Mat& FModule::act_bas(int c) const {
  if (act_bas_cache_.empty()) {
    act_bas_cache_.assign(A->n(), Mat());
    act_bas_have_.assign(A->n(), 0);
  }
  if (!act_bas_have_[c]) {
    Mat P = Mat::identity(n);
    for (int v = 0; v < A->e; ++v)
      for (uint32_t k = 0; k < A->basis[c].e[v]; ++k) P = mul(act[v], P, A->F);
    act_bas_cache_[c] = std::move(P);
    act_bas_have_[c] = 1;
  }
  return act_bas_cache_[c];
}

FModule module_k(const Algebra& A) {
  FModule M;
  M.A = &A;
  M.label = "k";
  M.n = 1;
  M.graded = A.graded;
  M.lvl = {0};
  M.act.assign(A.e, Mat(1, 1));
  return M;
}

FModule module_R(const Algebra& A) {
  FModule M;
  M.A = &A;
  M.label = "R";
  M.n = A.n();
  M.graded = A.graded;
  M.lvl.assign(A.bdeg.begin(), A.bdeg.end());
  M.act = A.mvar;
  return M;
}

FModule module_power(const Algebra& A, int j) {
  if (j < 0 || j > A.s + 1)
    throw PreconditionViolated("power of the maximal ideal out of range");
  const int lo = A.aoff(j);
  const int n = A.n() - lo;
  FModule M;
  M.A = &A;
  M.label = "m^" + std::to_string(j);
  M.n = n;
  M.graded = A.graded;
  M.lvl.assign(A.bdeg.begin() + lo, A.bdeg.end());
  for (int v = 0; v < A.e; ++v) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) a.at(i, c) = A.mvar[v].at(lo + i, lo + c);
    M.act.push_back(std::move(a));
  }
  return M;
}

FModule module_quot(const Algebra& A, int j) {
  if (j < 0 || j > A.s + 1)
    throw PreconditionViolated("power of the maximal ideal out of range");
  const int n = A.aoff(j);
  FModule M;
  M.A = &A;
  M.label = "R/m^" + std::to_string(j);
  M.n = n;
  M.graded = A.graded;
  M.lvl.assign(A.bdeg.begin(), A.bdeg.begin() + n);
  for (int v = 0; v < A.e; ++v) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) a.at(i, c) = A.mvar[v].at(i, c);
    M.act.push_back(std::move(a));
  }
  return M;
}

ModuleMap nu_inclusion(const Algebra& A, int j) {
  if (j < 1 || j > A.s + 1)
    throw PreconditionViolated("inclusion index out of range");
  ModuleMap f;
  f.from = module_power(A, j);
  f.to = module_power(A, j - 1);
  f.f = Mat(f.to.n, f.from.n);
  const int shift = A.adim(j - 1);
  for (int i = 0; i < f.from.n; ++i) f.f.at(i + shift, i) = 1;
  return f;
}

ModuleMap eta_projection(const Algebra& A, int j) {
  if (j < 1 || j > A.s + 1)
    throw PreconditionViolated("projection index out of range");
  ModuleMap f;
  f.from = module_quot(A, j);
  f.to = module_quot(A, j - 1);
  f.f = Mat(f.to.n, f.from.n);
  for (int i = 0; i < f.to.n; ++i) f.f.at(i, i) = 1;
  return f;
}

bool is_equivariant(const ModuleMap& f) {
  if (f.from.A != f.to.A) return false;
  const Fp& F = f.from.A->F;
  for (int v = 0; v < f.from.A->e; ++v)
    if (!(mul(f.to.act[v], f.f, F) == mul(f.f, f.from.act[v], F))) return false;
  return true;
}

void require_equivariant(const ModuleMap& f) {
  if (!is_equivariant(f))
    throw NotEquivariant("map does not commute with the module actions");
}

}  // namespace gkoszul
