#include "gkoszul/yoneda.hpp"

#include <map>
#include <tuple>

#include "gkoszul/errors.hpp"

namespace gkoszul {

namespace {

// A chain map of (co)homological degree m lifting a cohomology class:
// level i sends F_{m+i} to F_i.  Graded resolutions store lvl[i][g] as
// coordinates in the internal-degree slice gdeg(g) - dint of F_i (empty
// when that degree is negative); non-graded ones store full coordinates.
struct Tower {
  int m = 0;
  int dint = 0;  // internal degree shift, graded storage only
  std::vector<std::vector<std::vector<uint32_t>>> lvl;
};

// Matrix of level i of a tower on the degree-dsrc slice of F_{m+i}:
// maps the slice to the slice of degree dsrc - dint of F_i.  Column
// (g', u) is basis[clo+u] * lvl[i][g'].
Mat tower_block(const MinimalResolution& rk, const Tower& t, int i,
                int dsrc) {
  const Algebra& a = *rk.A;
  PieceLayout src = res_piece(rk, t.m + i, dsrc);
  PieceLayout dst = res_piece(rk, i, dsrc - t.dint);
  Mat out(dst.dim, src.dim);
  for (int g = 0; g < rk.f[t.m + i].rank(); ++g) {
    const Segment& seg = src.seg[g];
    if (seg.len == 0) continue;
    int dg = rk.f[t.m + i].gdeg[g];
    int clo = a.aoff(dsrc - dg);
    const std::vector<uint32_t>& w = t.lvl[i][g];
    if (w.empty()) continue;
    for (int u = 0; u < seg.len; ++u) {
      std::vector<uint32_t> col =
          piece_mult(rk, i, w, dg - t.dint, clo + u);
      for (int q = 0; q < dst.dim; ++q) out.at(q, seg.off + u) = col[q];
    }
  }
  return out;
}

// Full-coordinate form of level i: maps F_{m+i} to F_i, column (g', c).
Mat tower_full(const MinimalResolution& rk, const Tower& t, int i) {
  const Algebra& a = *rk.A;
  const int n = a.n();
  const int cols = rk.f[t.m + i].rank() * n;
  const int rows = rk.f[i].rank() * n;
  Mat out(rows, cols);
  for (int g = 0; g < rk.f[t.m + i].rank(); ++g) {
    const std::vector<uint32_t>& w = t.lvl[i][g];
    if (w.empty()) continue;
    for (int c = 0; c < n; ++c) {
      std::vector<uint32_t> col = full_mult(rk, i, w, c);
      for (int q = 0; q < rows; ++q) out.at(q, g * n + c) = col[q];
    }
  }
  return out;
}

// The identity chain map, kept through level cap.
Tower identity_tower(const MinimalResolution& rk, int cap) {
  const Algebra& a = *rk.A;
  Tower t;
  t.lvl.resize(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    int rank = rk.f[i].rank();
    t.lvl[i].resize(rank);
    for (int g = 0; g < rank; ++g) {
      if (rk.graded) {
        PieceLayout lay = res_piece(rk, i, rk.f[i].gdeg[g]);
        std::vector<uint32_t> w(lay.dim, 0);
        w[lay.seg[g].off] = 1;
        t.lvl[i][g] = w;
      } else {
        std::vector<uint32_t> w(static_cast<size_t>(rank) * a.n(), 0);
        w[static_cast<size_t>(g) * a.n()] = 1;
        t.lvl[i][g] = w;
      }
    }
  }
  return t;
}

// Lift of the dual-basis class of generator h of F_m through level cap:
// level 0 sends e_h to 1 and the other generators to 0, and each next
// level solves d sigma_i = sigma_{i-1} d.  Solvability comes from
// exactness and the minimality of the resolution.
Tower dual_tower(const MinimalResolution& rk, int m, int h, int cap) {
  const Algebra& a = *rk.A;
  const Fp& F = a.F;
  Tower t;
  t.m = m;
  t.dint = rk.graded ? rk.f[m].gdeg[h] : 0;
  t.lvl.resize(cap + 1);

  int rank0 = rk.f[m].rank();
  t.lvl[0].resize(rank0);
  for (int g = 0; g < rank0; ++g) {
    if (rk.graded) {
      int d = rk.f[m].gdeg[g] - t.dint;
      if (d < 0) continue;
      std::vector<uint32_t> w(a.adim(d), 0);
      if (g == h) w[0] = 1;
      t.lvl[0][g] = w;
    } else {
      std::vector<uint32_t> w(static_cast<size_t>(a.n()), 0);
      if (g == h) w[0] = 1;
      t.lvl[0][g] = w;
    }
  }

  for (int i = 1; i <= cap; ++i) {
    int rank = rk.f[m + i].rank();
    t.lvl[i].resize(rank);
    if (rk.graded) {
      std::map<int, std::vector<int>> byd;
      for (int g = 0; g < rank; ++g) byd[rk.f[m + i].gdeg[g]].push_back(g);
      for (const auto& [d, gs] : byd) {
        if (d - t.dint < 0) continue;
        // sigma_{i-1}(d e_g): the stored differential column of e_g fed
        // through the previous level of the tower.
        Mat block = tower_block(rk, t, i - 1, d);
        PieceLayout piece = res_piece(rk, i, d - t.dint);
        Mat y(block.rows(), static_cast<int>(gs.size()));
        for (int k = 0; k < (int)gs.size(); ++k) {
          std::vector<uint32_t> rhs = apply(block, rk.img[m + i][gs[k]], F);
          for (int q = 0; q < block.rows(); ++q) y.at(q, k) = rhs[q];
        }
        std::optional<Mat> x = solve(diff_block(rk, i, d - t.dint), y, F);
        if (!x) throw Error("internal: cohomology lift is unsolvable");
        for (int k = 0; k < (int)gs.size(); ++k) {
          std::vector<uint32_t> w(piece.dim);
          for (int q = 0; q < piece.dim; ++q) w[q] = x->at(q, k);
          t.lvl[i][gs[k]] = w;
        }
      }
    } else {
      Mat block = tower_full(rk, t, i - 1);
      Mat y(block.rows(), rank);
      for (int g = 0; g < rank; ++g) {
        std::vector<uint32_t> rhs = apply(block, rk.img[m + i][g], F);
        for (int q = 0; q < block.rows(); ++q) y.at(q, g) = rhs[q];
      }
      std::optional<Mat> x = solve(diff_full(rk, i), y, F);
      if (!x) throw Error("internal: cohomology lift is unsolvable");
      for (int g = 0; g < rank; ++g) {
        std::vector<uint32_t> w(x->rows());
        for (int q = 0; q < x->rows(); ++q) w[q] = x->at(q, g);
        t.lvl[i][g] = w;
      }
    }
  }
  return t;
}

// The class row of the product (dual of h in degree m) * tau over the
// generators of F_{m + tau.m}: entry g is the unit coefficient of the
// h-component of level-m of tau at generator g.
std::vector<uint32_t> product_class_row(const MinimalResolution& rk, int m,
                                        int h, const Tower& tau) {
  int src = m + tau.m;
  int rank = rk.f[src].rank();
  std::vector<uint32_t> row(rank, 0);
  for (int g = 0; g < rank; ++g) {
    const std::vector<uint32_t>& w = tau.lvl[m][g];
    if (w.empty()) continue;
    if (rk.graded) {
      if (rk.f[src].gdeg[g] - tau.dint != rk.f[m].gdeg[h]) continue;
      PieceLayout lay = res_piece(rk, m, rk.f[src].gdeg[g] - tau.dint);
      row[g] = w[lay.seg[h].off];
    } else {
      row[g] = w[static_cast<size_t>(h) * rk.A->n()];
    }
  }
  return row;
}

// Composite (dual generator tower) o tau, kept through level cap.  The
// level/degree blocks of the generator tower are shared across calls via
// the caller-owned cache (one cache per generator).
Tower compose_tower(const MinimalResolution& rk, const Tower& gen,
                    const Tower& tau, int cap,
                    std::map<std::pair<int, int>, Mat>& blocks) {
  const Fp& F = rk.A->F;
  Tower t;
  t.m = gen.m + tau.m;
  t.dint = gen.dint + tau.dint;
  t.lvl.resize(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    int rank = rk.f[t.m + i].rank();
    t.lvl[i].resize(rank);
    if (rk.graded) {
      for (int g = 0; g < rank; ++g) {
        const std::vector<uint32_t>& w = tau.lvl[gen.m + i][g];
        if (w.empty()) continue;
        int d = rk.f[t.m + i].gdeg[g] - tau.dint;
        if (d - gen.dint < 0) continue;
        auto key = std::make_pair(i, d);
        auto it = blocks.find(key);
        if (it == blocks.end())
          it = blocks.emplace(key, tower_block(rk, gen, i, d)).first;
        t.lvl[i][g] = apply(it->second, w, F);
      }
    } else {
      auto key = std::make_pair(i, 0);
      auto it = blocks.find(key);
      if (it == blocks.end())
        it = blocks.emplace(key, tower_full(rk, gen, i)).first;
      for (int g = 0; g < rank; ++g) {
        const std::vector<uint32_t>& w = tau.lvl[gen.m + i][g];
        if (w.empty()) continue;
        t.lvl[i][g] = apply(it->second, w, F);
      }
    }
  }
  return t;
}

}  // namespace

ExtGeneration ext_generated_by(InstanceContext& ctx, int maxdeg, int depth) {
  if (maxdeg < 1 || maxdeg > 2)
    throw PreconditionViolated("ext_generated_by: maxdeg must be 1 or 2");
  if (depth < 0)
    throw PreconditionViolated("ext_generated_by: depth must be >= 0");
  const MinimalResolution& rk = ctx.k_res(depth < maxdeg ? maxdeg : depth);
  const Fp& F = ctx.algebra().F;

  ExtGeneration out;
  for (int i = 0; i <= depth; ++i) out.betti.push_back(rk.f[i].rank());
  out.subdim.assign(1, 1);

  // Towers for the dual classes of the resolution generators in degrees
  // 1..maxdeg; these are the chosen generators of the subalgebra.
  struct Gen {
    int m, h;
    Tower tower;
  };
  std::vector<Gen> gens;
  for (int m = 1; m <= maxdeg && m <= depth; ++m)
    for (int h = 0; h < rk.f[m].rank(); ++h)
      gens.push_back({m, h, dual_tower(rk, m, h, depth - m)});

  std::vector<std::vector<Tower>> towers(depth + 1);
  towers[0].push_back(identity_tower(rk, depth));

  for (int n = 1; n <= depth; ++n) {
    int bn = rk.f[n].rank();
    std::vector<std::vector<uint32_t>> rows;
    std::vector<std::pair<int, int>> src;  // (generator, tower) per row
    for (int gi = 0; gi < (int)gens.size(); ++gi) {
      const Gen& gen = gens[gi];
      if (n - gen.m < 0) continue;
      for (int ti = 0; ti < (int)towers[n - gen.m].size(); ++ti) {
        rows.push_back(
            product_class_row(rk, gen.m, gen.h, towers[n - gen.m][ti]));
        src.push_back({gi, ti});
      }
    }
    Mat classes(bn, static_cast<int>(rows.size()));
    for (int j = 0; j < (int)rows.size(); ++j)
      for (int q = 0; q < bn; ++q) classes.at(q, j) = rows[j][q];
    Rref rr = rref(classes, F);
    out.subdim.push_back(rr.rank());
    if (rr.rank() < bn && out.first_gap < 0) {
      out.generated = false;
      out.first_gap = n;
    }
    if (n < depth) {
      std::map<int, std::map<std::pair<int, int>, Mat>> caches;
      for (int piv : rr.pivot) {
        const Gen& gen = gens[src[piv].first];
        towers[n].push_back(
            compose_tower(rk, gen.tower, towers[n - gen.m][src[piv].second],
                          depth - n, caches[src[piv].first]));
      }
    }
    if (n >= 2) towers[n - 2].clear();
  }
  return out;
}

bool is_k1(InstanceContext& ctx, int depth) {
  return ext_generated_by(ctx, 1, depth).generated;
}

bool is_k2(InstanceContext& ctx, int depth) {
  return ext_generated_by(ctx, 2, depth).generated;
}

}  // namespace gkoszul
