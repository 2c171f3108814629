#include "gkoszul/chain_map.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gkoszul/cache.hpp"
#include "gkoszul/errors.hpp"

namespace gkoszul {

RingMap quotient_ring_map(const Algebra& a, const Algebra& b) {
  if (a.pres.variables != b.pres.variables || a.F.p() != b.F.p())
    throw PreconditionViolated(
        "quotient_ring_map: algebras must share variables and field");
  RingMap out{&a, &b, Mat(b.n(), a.n())};
  for (int i = 0; i < a.n(); ++i) {
    std::vector<uint32_t> w = b.nf_mono(a.basis[i]);
    for (int r = 0; r < b.n(); ++r) out.rho.at(r, i) = w[r];
  }
  // The basis-to-basis matrix is a ring map exactly when it intertwines
  // multiplication by every variable; otherwise b is not a quotient of a.
  for (int v = 0; v < a.e; ++v) {
    Mat lhs = mul(b.mvar[v], out.rho, b.F);
    Mat rhs = mul(out.rho, a.mvar[v], b.F);
    if (!(lhs == rhs))
      throw NotEquivariant("quotient_ring_map: target is not a quotient");
  }
  return out;
}

namespace {

// Nonzero entries (generator, ring-basis index, value) of column h of the
// i-th differential, uniform over graded and full storage.
std::vector<std::tuple<int, int, uint32_t>> column_entries(
    const MinimalResolution& r, int i, int h) {
  std::vector<std::tuple<int, int, uint32_t>> out;
  const std::vector<uint32_t>& w = r.img[i][h];
  const int rank = r.f[i - 1].rank();
  if (r.graded) {
    PieceLayout lay = res_piece(r, i - 1, r.f[i].gdeg[h]);
    for (int g = 0; g < rank; ++g) {
      const Segment& seg = lay.seg[g];
      int clo = r.A->aoff(r.f[i].gdeg[h] - r.f[i - 1].gdeg[g]);
      for (int u = 0; u < seg.len; ++u)
        if (w[seg.off + u]) out.emplace_back(g, clo + u, w[seg.off + u]);
    }
  } else {
    const int n = r.A->n();
    for (int g = 0; g < rank; ++g)
      for (int c = 0; c < n; ++c)
        if (w[g * n + c]) out.emplace_back(g, c, w[g * n + c]);
  }
  return out;
}

}  // namespace

KLift lift_k(const RingMap& rho, const MinimalResolution& rf,
             const MinimalResolution& rg, int depth) {
  if (rf.A != rho.from || rg.A != rho.to)
    throw PreconditionViolated("lift_k: resolutions do not match the map");
  if (rf.target.n != 1 || rg.target.n != 1)
    throw PreconditionViolated(
        "lift_k: both resolutions must resolve the residue field");
  if (depth < 0 || depth > rf.depth() || depth > rg.depth())
    throw DepthExceeded("lift_k: depth exceeds a resolution");
  const Algebra& a = *rho.from;
  const Algebra& b = *rho.to;
  const Fp& F = b.F;
  const bool graded = rf.graded && rg.graded;
  const int nb = b.n();

  KLift out;
  out.phi.resize(depth + 1);
  out.tor.resize(depth + 1);
  if (graded) {
    out.phi[0] = {std::vector<uint32_t>{1}};
  } else {
    std::vector<uint32_t> w(static_cast<size_t>(nb), 0);
    w[0] = 1;
    out.phi[0] = {w};
  }
  out.tor[0] = Mat::identity(1);

  for (int i = 1; i <= depth; ++i) {
    const int hs = rf.f[i].rank();
    const int gs = rg.f[i].rank();
    out.phi[i].resize(hs);
    Mat tor(gs, hs);
    if (hs == 0) {
      out.tor[i] = tor;
      continue;
    }
    if (graded) {
      std::map<int, std::vector<int>> byd;
      for (int h = 0; h < hs; ++h) byd[rf.f[i].gdeg[h]].push_back(h);
      for (const auto& [d, cols] : byd) {
        PieceLayout rows = res_piece(rg, i - 1, d);
        Mat y(rows.dim, static_cast<int>(cols.size()));
        for (int k = 0; k < (int)cols.size(); ++k) {
          int h = cols[k];
          for (const auto& [g, ca, val] : column_entries(rf, i, h)) {
            int dg = rf.f[i - 1].gdeg[g];
            int deg = a.bdeg[ca];
            // rho sends a degree-deg basis monomial to degree deg in b.
            for (int r = b.aoff(deg); r < b.aoff(deg + 1); ++r) {
              uint32_t rc = rho.rho.at(r, ca);
              if (!rc) continue;
              uint32_t coef = F.mul(val, rc);
              std::vector<uint32_t> t =
                  piece_mult(rg, i - 1, out.phi[i - 1][g], dg, r);
              for (int q = 0; q < rows.dim; ++q)
                if (t[q]) y.at(q, k) = F.add(y.at(q, k), F.mul(coef, t[q]));
            }
          }
        }
        std::optional<Mat> x = solve(diff_block(rg, i, d), y, F);
        if (!x) throw Error("internal: chain lift is unsolvable");
        PieceLayout src = res_piece(rg, i, d);
        for (int k = 0; k < (int)cols.size(); ++k) {
          std::vector<uint32_t> w(src.dim);
          for (int q = 0; q < src.dim; ++q) w[q] = x->at(q, k);
          out.phi[i][cols[k]] = w;
        }
      }
      for (int h = 0; h < hs; ++h) {
        int d = rf.f[i].gdeg[h];
        PieceLayout src = res_piece(rg, i, d);
        for (int g = 0; g < gs; ++g)
          if (rg.f[i].gdeg[g] == d)
            tor.at(g, h) = out.phi[i][h][src.seg[g].off];
      }
    } else {
      const int rowdim = rg.f[i - 1].rank() * nb;
      Mat y(rowdim, hs);
      for (int h = 0; h < hs; ++h)
        for (const auto& [g, ca, val] : column_entries(rf, i, h))
          for (int r = 0; r < nb; ++r) {
            uint32_t rc = rho.rho.at(r, ca);
            if (!rc) continue;
            uint32_t coef = F.mul(val, rc);
            std::vector<uint32_t> t = full_mult(rg, i - 1, out.phi[i - 1][g], r);
            for (int q = 0; q < rowdim; ++q)
              if (t[q]) y.at(q, h) = F.add(y.at(q, h), F.mul(coef, t[q]));
          }
      std::optional<Mat> x = solve(diff_full(rg, i), y, F);
      if (!x) throw Error("internal: chain lift is unsolvable");
      for (int h = 0; h < hs; ++h) {
        std::vector<uint32_t> w(static_cast<size_t>(gs) * nb);
        for (int q = 0; q < (int)w.size(); ++q) w[q] = x->at(q, h);
        out.phi[i][h] = w;
        for (int g = 0; g < gs; ++g) tor.at(g, h) = w[static_cast<size_t>(g) * nb];
      }
    }
    out.tor[i] = tor;
  }
  return out;
}

namespace {

SmallCheck small_from_lift(const Algebra& a, const MinimalResolution& rf,
                           const KLift& lift, int depth) {
  SmallCheck out;
  out.small = true;
  for (int i = 0; i <= depth; ++i) {
    int64_t r = rank_of(lift.tor[i], a.F);
    out.ranks.push_back(r);
    if (r != rf.f[i].rank()) {
      out.small = false;
      out.failed.push_back(i);
    }
  }
  return out;
}

}  // namespace

SmallCheck small_check(const Algebra& a, int j, int depth) {
  if (j < 2 || j > a.s + 1)
    throw PreconditionViolated("small_check: need 2 <= j <= s+1");
  if (depth < 0) throw PreconditionViolated("small_check: depth must be >= 0");
  RingPresentation q = a.pres;
  q.truncation = a.pres.truncation ? std::min(*a.pres.truncation, j) : j;
  Algebra b = build_algebra(q);
  RingMap rho = quotient_ring_map(a, b);
  MinimalResolution rf = resolve_module(module_k(a), depth);
  MinimalResolution rg = resolve_module(module_k(b), depth);
  KLift lift = lift_k(rho, rf, rg, depth);
  return small_from_lift(a, rf, lift, depth);
}

SmallCheck small_check(InstanceContext& ctx, int j, int depth) {
  const Algebra& a = ctx.algebra();
  if (j < 2 || j > a.s + 1)
    throw PreconditionViolated("small_check: need 2 <= j <= s+1");
  if (depth < 0) throw PreconditionViolated("small_check: depth must be >= 0");
  InstanceContext& bc = ctx.truncated(j);
  RingMap rho = quotient_ring_map(a, bc.algebra());
  const MinimalResolution& rf = ctx.k_res(depth);
  const MinimalResolution& rg = bc.k_res(depth);
  KLift lift = lift_k(rho, rf, rg, depth);
  return small_from_lift(a, rf, lift, depth);
}

bool ext2_surjectivity(const Algebra& a, int t) {
  return small_check(a, t, 2).small;
}

}  // namespace gkoszul
