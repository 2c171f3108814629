#include "gkoszul/hom_checks.hpp"

#include "gkoszul/errors.hpp"

namespace gkoszul {

DualityReport power_quotient_duality(InstanceContext& ctx, int top) {
  const Algebra& a = ctx.algebra();
  DualityReport out;
  for (int j = 2; j <= a.s + 1; ++j) {
    std::vector<int64_t> nu = ctx.nu_ranks(j, top);
    std::vector<int64_t> eta = ctx.eta_ranks(j, top + 1);
    for (int i = 0; i <= top; ++i)
      if (nu[i] != eta[i + 1]) {
        out.pass = false;
        out.failed.push_back({j, i});
      }
  }
  return out;
}

ZSeries nu_image_series(InstanceContext& ctx, int j, int top) {
  std::vector<int64_t> r = ctx.nu_ranks(j + 1, top);
  ZSeries s(top);
  for (int i = 0; i <= top; ++i) s[i] = r[i];
  return s;
}

bool power_poincare_identity(InstanceContext& ctx, int j, int top) {
  const Algebra& a = ctx.algebra();
  if (j < 0 || j > a.s) throw PreconditionViolated("need 0 <= j <= s");
  int64_t aj = a.adim(j);
  ZSeries lhs = ctx.poincare_power(j, top)
                    .sub(ctx.poincare_k(top).scale(aj))
                    .add(ctx.poincare_power(j + 1, top).shift(1));
  ZSeries rhs = nu_image_series(ctx, j, top).mul(binom_pow(1, top));
  return lhs == rhs;
}

bool nu_les_consistent(InstanceContext& ctx, int j, int top) {
  const Algebra& a = ctx.algebra();
  if (j < 1 || j > a.s + 1) throw PreconditionViolated("need 1 <= j <= s+1");
  std::vector<int64_t> direct = ctx.nu_ranks(j, top);
  std::vector<int64_t> bk = ctx.power_betti(j, top);
  std::vector<int64_t> bprev = ctx.power_betti(j - 1, top);
  std::vector<int64_t> bfield = ctx.module_betti(module_k(a), top);
  int64_t aj = a.adim(j - 1);
  int64_t prev = 0;
  for (int i = 0; i <= top; ++i) {
    int64_t want = i == 0 ? 0
                          : bprev[i] - aj * bfield[i] +
                                (i >= 1 ? bk[i - 1] : 0) - prev;
    if (direct[i] != want) return false;
    prev = direct[i];
  }
  return true;
}

bool koszul_linearity(InstanceContext& ctx, int depth) {
  const MinimalResolution& rk = ctx.k_res(depth);
  if (!rk.graded) return false;
  for (int i = 0; i <= depth; ++i)
    for (int d : rk.f[i].gdeg)
      if (d != i) return false;
  return true;
}

}  // namespace gkoszul
