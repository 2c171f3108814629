#include "gkoszul/resolution.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "gkoszul/errors.hpp"

namespace gkoszul {

std::vector<int64_t> MinimalResolution::betti() const {
  std::vector<int64_t> b;
  for (const FreeMod& m : f) b.push_back(m.rank());
  return b;
}

PieceLayout res_piece(const MinimalResolution& R, int i, int d) {
  PieceLayout L;
  const Algebra& A = *R.A;
  for (int g : R.f[i].gdeg) {
    int len = A.adim(d - g);
    L.seg.push_back({L.dim, len});
    L.dim += len;
  }
  return L;
}

namespace {
constexpr uint64_t kAccGuard = uint64_t{1} << 62;
}  // namespace

std::vector<uint32_t> piece_mult(const MinimalResolution& R, int i,
                                 const std::vector<uint32_t>& w, int dsrc,
                                 int c) {
  const Algebra& A = *R.A;
  const int delta = A.bdeg[c];
  PieceLayout src = res_piece(R, i, dsrc);
  PieceLayout dst = res_piece(R, i, dsrc + delta);
  const Mat& mul = A.mbas[c];
  std::vector<uint32_t> out(dst.dim, 0);
  for (int g = 0; g < R.f[i].rank(); ++g) {
    const int sl = src.seg[g].len, dl = dst.seg[g].len;
    if (sl == 0 || dl == 0) continue;
    const int srow = A.aoff(dsrc - R.f[i].gdeg[g]);
    const int drow = A.aoff(dsrc + delta - R.f[i].gdeg[g]);
    for (int r = 0; r < dl; ++r) {
      uint64_t acc = 0;
      for (int a = 0; a < sl; ++a) {
        acc += static_cast<uint64_t>(mul.at(drow + r, srow + a)) *
               w[src.seg[g].off + a];
        if (acc >= kAccGuard) acc %= A.F.p();
      }
      out[dst.seg[g].off + r] = static_cast<uint32_t>(acc % A.F.p());
    }
  }
  return out;
}

std::vector<uint32_t> full_mult(const MinimalResolution& R, int i,
                                const std::vector<uint32_t>& w, int c) {
  const Algebra& A = *R.A;
  const int n = A.n();
  const int rank = R.f[i].rank();
  std::vector<uint32_t> out(static_cast<size_t>(rank) * n, 0);
  const Mat& mul = A.mbas[c];
  for (int g = 0; g < rank; ++g)
    for (int a = 0; a < n; ++a) {
      uint32_t v = w[static_cast<size_t>(g) * n + a];
      if (!v) continue;
      for (int q = 0; q < n; ++q) {
        uint32_t mv = mul.at(q, a);
        if (mv)
          out[static_cast<size_t>(g) * n + q] =
              A.F.add(out[static_cast<size_t>(g) * n + q], A.F.mul(mv, v));
      }
    }
  return out;
}

namespace {

// Minimal generators of the module: level 0.
void build_level0(MinimalResolution& R) {
  const FModule& M = R.target;
  const Algebra& A = *R.A;
  const Fp& F = A.F;
  FreeMod f0;
  if (R.graded) {
    if (M.n > 0) {
      for (int d = M.lvl.front(); d <= M.lvl.back(); ++d) {
        const int nd = M.ldim(d), lo = M.loff(d);
        if (nd == 0) continue;
        const int prev = M.ldim(d - 1), plo = M.loff(d - 1);
        Mat mm(prev * A.e, nd);
        for (int v = 0; v < A.e; ++v)
          for (int u = 0; u < prev; ++u)
            for (int j = 0; j < nd; ++j)
              mm.at(v * prev + u, j) = M.act[v].at(lo + j, plo + u);
        Mat fresh = complement_basis(mm, Mat::identity(nd), F);
        for (int h = 0; h < fresh.rows(); ++h) {
          f0.gdeg.push_back(d);
          std::vector<uint32_t> w(nd);
          for (int j = 0; j < nd; ++j) w[j] = fresh.at(h, j);
          R.aug.push_back(std::move(w));
        }
      }
    }
  } else if (M.n > 0) {
    Mat mm(M.n * A.e, M.n);
    for (int v = 0; v < A.e; ++v)
      for (int u = 0; u < M.n; ++u)
        for (int j = 0; j < M.n; ++j)
          mm.at(v * M.n + u, j) = M.act[v].at(j, u);
    Mat fresh = complement_basis(mm, Mat::identity(M.n), F);
    for (int h = 0; h < fresh.rows(); ++h) {
      f0.gdeg.push_back(0);
      std::vector<uint32_t> w(M.n);
      for (int j = 0; j < M.n; ++j) w[j] = fresh.at(h, j);
      R.aug.push_back(std::move(w));
    }
  }
  R.f.push_back(std::move(f0));
}

// One syzygy step: given F_i and its differential, append F_{i+1}.
void syzygy_step(MinimalResolution& R, int i) {
  const Algebra& A = *R.A;
  const Fp& F = A.F;
  FreeMod next;
  std::vector<std::vector<uint32_t>> nimg;

  if (R.f[i].rank() > 0 && R.graded) {
    const auto [lo_it, hi_it] =
        std::minmax_element(R.f[i].gdeg.begin(), R.f[i].gdeg.end());
    const int lo = *lo_it, hi = *hi_it + A.s;
    Mat prevK(0, 0);  // kernel at the previous degree, as columns
    for (int d = lo; d <= hi; ++d) {
      PieceLayout cur = res_piece(R, i, d);
      if (cur.dim == 0) {
        prevK = Mat(0, 0);
        continue;
      }
      Mat Di = (i == 0) ? aug_block(R, d) : diff_block(R, i, d);
      Mat K = kernel_basis(Di, F);
      // The radical times the kernel, within this degree: the variables
      // applied to the previous degree's kernel columns.
      Mat mk(prevK.cols() * A.e, cur.dim);
      for (int z = 0; z < prevK.cols(); ++z) {
        std::vector<uint32_t> w(prevK.rows());
        for (int r = 0; r < prevK.rows(); ++r) w[r] = prevK.at(r, z);
        for (int v = 0; v < A.e; ++v) {
          std::vector<uint32_t> xv =
              piece_mult(R, i, w, d - 1, A.off[1] + v);
          for (int j = 0; j < cur.dim; ++j) mk.at(z * A.e + v, j) = xv[j];
        }
      }
      Mat fresh = complement_basis(mk, transpose(K), F);
      for (int h = 0; h < fresh.rows(); ++h) {
        next.gdeg.push_back(d);
        std::vector<uint32_t> w(cur.dim);
        for (int j = 0; j < cur.dim; ++j) w[j] = fresh.at(h, j);
        for (int g = 0; g < R.f[i].rank(); ++g)
          if (R.f[i].gdeg[g] == d && w[cur.seg[g].off] != 0)
            throw Error("internal: resolution lost minimality");
        nimg.push_back(std::move(w));
      }
      prevK = std::move(K);
    }
  } else if (R.f[i].rank() > 0) {
    const int n = A.n();
    Mat Di = (i == 0) ? aug_full(R) : diff_full(R, i);
    Mat K = kernel_basis(Di, F);
    Mat mk(K.cols() * A.e, K.rows());
    for (int z = 0; z < K.cols(); ++z)
      for (int v = 0; v < A.e; ++v) {
        const Mat& mv = A.mvar[v];
        for (int g = 0; g < R.f[i].rank(); ++g)
          for (int r = 0; r < n; ++r) {
            uint64_t acc = 0;
            for (int c = 0; c < n; ++c) {
              acc += static_cast<uint64_t>(mv.at(r, c)) * K.at(g * n + c, z);
              if (acc >= kAccGuard) acc %= F.p();
            }
            mk.at(z * A.e + v, g * n + r) =
                static_cast<uint32_t>(acc % F.p());
          }
      }
    Mat fresh = complement_basis(mk, transpose(K), F);
    for (int h = 0; h < fresh.rows(); ++h) {
      next.gdeg.push_back(0);
      std::vector<uint32_t> w(K.rows());
      for (int j = 0; j < K.rows(); ++j) w[j] = fresh.at(h, j);
      for (int g = 0; g < R.f[i].rank(); ++g)
        if (w[g * n] != 0)
          throw Error("internal: resolution lost minimality");
      nimg.push_back(std::move(w));
    }
  }

  R.f.push_back(std::move(next));
  R.img.push_back(std::move(nimg));
}

}  // namespace

MinimalResolution resolve_module(const FModule& M, int depth) {
  if (depth < 0)
    throw PreconditionViolated("resolve_module: depth must be >= 0");
  MinimalResolution R;
  R.A = M.A;
  R.label = M.label;
  R.graded = M.graded;
  R.target = M;
  R.img.resize(1);  // img[0] is never used; the augmentation lives in aug
  build_level0(R);
  for (int i = 0; i < depth; ++i) syzygy_step(R, i);
  return R;
}

Mat diff_block(const MinimalResolution& R, int i, int d) {
  const Algebra& A = *R.A;
  PieceLayout cols = res_piece(R, i, d);
  PieceLayout rows = res_piece(R, i - 1, d);
  Mat out(rows.dim, cols.dim);
  for (int h = 0; h < R.f[i].rank(); ++h) {
    if (cols.seg[h].len == 0) continue;
    const int D = R.f[i].gdeg[h], delta = d - D;
    for (int c = A.aoff(delta); c < A.aoff(delta + 1); ++c) {
      std::vector<uint32_t> v = piece_mult(R, i - 1, R.img[i][h], D, c);
      const int col = cols.seg[h].off + (c - A.aoff(delta));
      for (int r = 0; r < rows.dim; ++r) out.at(r, col) = v[r];
    }
  }
  return out;
}

Mat aug_block(const MinimalResolution& R, int d) {
  const FModule& M = R.target;
  const Algebra& A = *R.A;
  PieceLayout cols = res_piece(R, 0, d);
  Mat out(M.ldim(d), cols.dim);
  const int rlo = M.loff(d);
  for (int h = 0; h < R.f[0].rank(); ++h) {
    if (cols.seg[h].len == 0) continue;
    const int D = R.f[0].gdeg[h], delta = d - D;
    const int clo = M.loff(D);
    for (int c = A.aoff(delta); c < A.aoff(delta + 1); ++c) {
      const Mat& act = M.act_bas(c);
      const int col = cols.seg[h].off + (c - A.aoff(delta));
      for (int r = 0; r < out.rows(); ++r) {
        uint64_t acc = 0;
        for (size_t u = 0; u < R.aug[h].size(); ++u) {
          acc += static_cast<uint64_t>(
                     act.at(rlo + r, clo + static_cast<int>(u))) *
                 R.aug[h][u];
          if (acc >= kAccGuard) acc %= A.F.p();
        }
        out.at(r, col) = static_cast<uint32_t>(acc % A.F.p());
      }
    }
  }
  return out;
}

Mat diff_full(const MinimalResolution& R, int i) {
  const Algebra& A = *R.A;
  const int n = A.n();
  Mat out(R.f[i - 1].rank() * n, R.f[i].rank() * n);
  for (int h = 0; h < R.f[i].rank(); ++h) {
    if (R.graded) {
      const int D = R.f[i].gdeg[h];
      for (int c = 0; c < n; ++c) {
        std::vector<uint32_t> v = piece_mult(R, i - 1, R.img[i][h], D, c);
        PieceLayout dst = res_piece(R, i - 1, D + A.bdeg[c]);
        for (int g = 0; g < R.f[i - 1].rank(); ++g) {
          const int base = A.aoff(D + A.bdeg[c] - R.f[i - 1].gdeg[g]);
          for (int a = 0; a < dst.seg[g].len; ++a)
            out.at(g * n + base + a, h * n + c) = v[dst.seg[g].off + a];
        }
      }
    } else {
      const std::vector<uint32_t>& w = R.img[i][h];
      for (int c = 0; c < n; ++c) {
        const Mat& mul = A.mbas[c];
        for (int g = 0; g < R.f[i - 1].rank(); ++g)
          for (int r = 0; r < n; ++r) {
            uint64_t acc = 0;
            for (int a = 0; a < n; ++a) {
              acc += static_cast<uint64_t>(mul.at(r, a)) * w[g * n + a];
              if (acc >= kAccGuard) acc %= A.F.p();
            }
            out.at(g * n + r, h * n + c) =
                static_cast<uint32_t>(acc % A.F.p());
          }
      }
    }
  }
  return out;
}

Mat aug_full(const MinimalResolution& R) {
  const FModule& M = R.target;
  const Algebra& A = *R.A;
  const int n = A.n();
  Mat out(M.n, R.f[0].rank() * n);
  for (int h = 0; h < R.f[0].rank(); ++h) {
    const int clo = R.graded ? M.loff(R.f[0].gdeg[h]) : 0;
    for (int c = 0; c < n; ++c) {
      const Mat& act = M.act_bas(c);
      for (int r = 0; r < M.n; ++r) {
        uint64_t acc = 0;
        for (size_t u = 0; u < R.aug[h].size(); ++u) {
          acc += static_cast<uint64_t>(
                     act.at(r, clo + static_cast<int>(u))) *
                 R.aug[h][u];
          if (acc >= kAccGuard) acc %= A.F.p();
        }
        out.at(r, h * n + c) = static_cast<uint32_t>(acc % A.F.p());
      }
    }
  }
  return out;
}

ZSeries betti_series(const MinimalResolution& R, int order) {
  if (order > R.depth())
    throw DepthExceeded("betti_series: order exceeds resolution depth");
  ZSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = R.f[i].rank();
  return s;
}

namespace {

PieceLayout tensor_piece(const MinimalResolution& R, const FModule& M, int i,
                         int d) {
  PieceLayout L;
  for (int g : R.f[i].gdeg) {
    int len = M.ldim(d - g);
    L.seg.push_back({L.dim, len});
    L.dim += len;
  }
  return L;
}

// Degree-d block of d_i (x) id_M, graded case.
Mat tensor_block(const MinimalResolution& R, const FModule& M, int i, int d) {
  const Algebra& A = *R.A;
  const Fp& F = A.F;
  PieceLayout cols = tensor_piece(R, M, i, d);
  PieceLayout rows = tensor_piece(R, M, i - 1, d);
  Mat out(rows.dim, cols.dim);
  if (rows.dim == 0 || cols.dim == 0) return out;
  for (int h = 0; h < R.f[i].rank(); ++h) {
    if (cols.seg[h].len == 0) continue;
    const int Dh = R.f[i].gdeg[h];
    const int ulo = M.loff(d - Dh);
    PieceLayout ph = res_piece(R, i - 1, Dh);
    const std::vector<uint32_t>& w = R.img[i][h];
    for (int g = 0; g < R.f[i - 1].rank(); ++g) {
      if (ph.seg[g].len == 0 || rows.seg[g].len == 0) continue;
      const int Dg = R.f[i - 1].gdeg[g];
      const int rlo = M.loff(d - Dg);
      for (int a = 0; a < ph.seg[g].len; ++a) {
        const uint32_t val = w[ph.seg[g].off + a];
        if (!val) continue;
        const int c = A.aoff(Dh - Dg) + a;
        const Mat& act = M.act_bas(c);
        for (int r = 0; r < rows.seg[g].len; ++r)
          for (int u = 0; u < cols.seg[h].len; ++u) {
            const uint32_t x = act.at(rlo + r, ulo + u);
            if (!x) continue;
            uint32_t& cell =
                out.at(rows.seg[g].off + r, cols.seg[h].off + u);
            cell = F.add(cell, F.mul(val, x));
          }
      }
    }
  }
  return out;
}

// Entries of d_i(e_h) as (target generator, algebra basis index, coeff).
std::vector<std::tuple<int, int, uint32_t>> img_entries(
    const MinimalResolution& R, int i, int h) {
  const Algebra& A = *R.A;
  std::vector<std::tuple<int, int, uint32_t>> out;
  const std::vector<uint32_t>& w = R.img[i][h];
  if (R.graded) {
    PieceLayout ph = res_piece(R, i - 1, R.f[i].gdeg[h]);
    for (int g = 0; g < R.f[i - 1].rank(); ++g) {
      const int base = A.aoff(R.f[i].gdeg[h] - R.f[i - 1].gdeg[g]);
      for (int a = 0; a < ph.seg[g].len; ++a)
        if (w[ph.seg[g].off + a])
          out.emplace_back(g, base + a, w[ph.seg[g].off + a]);
    }
  } else {
    const int n = A.n();
    for (int g = 0; g < R.f[i - 1].rank(); ++g)
      for (int c = 0; c < n; ++c)
        if (w[g * n + c]) out.emplace_back(g, c, w[g * n + c]);
  }
  return out;
}

// Full matrix of d_i (x) id_M.
Mat tensor_full(const MinimalResolution& R, const FModule& M, int i) {
  const Fp& F = R.A->F;
  Mat out(R.f[i - 1].rank() * M.n, R.f[i].rank() * M.n);
  for (int h = 0; h < R.f[i].rank(); ++h)
    for (const auto& [g, c, val] : img_entries(R, i, h)) {
      const Mat& act = M.act_bas(c);
      for (int r = 0; r < M.n; ++r)
        for (int u = 0; u < M.n; ++u) {
          const uint32_t x = act.at(r, u);
          if (!x) continue;
          uint32_t& cell = out.at(g * M.n + r, h * M.n + u);
          cell = F.add(cell, F.mul(val, x));
        }
    }
  return out;
}

}  // namespace

std::vector<int64_t> tensor_homology(const MinimalResolution& F,
                                     const FModule& M, int top) {
  if (F.A != M.A)
    throw PreconditionViolated(
        "tensor_homology: module and resolution algebras differ");
  if (top < 0) return {};
  if (F.depth() < top + 1)
    throw DepthExceeded("tensor_homology: resolution too shallow");
  const Fp& field = F.A->F;
  std::vector<int64_t> h(top + 1, 0);
  if (M.n == 0) return h;

  if (F.graded && M.graded) {
    std::map<std::pair<int, int>, int64_t> memo;
    auto rank_at = [&](int i, int d) -> int64_t {
      if (i == 0 || i > top + 1 || F.f[i].rank() == 0) return 0;
      auto it = memo.find({i, d});
      if (it != memo.end()) return it->second;
      int64_t r = rank_of(tensor_block(F, M, i, d), field);
      memo.emplace(std::make_pair(i, d), r);
      return r;
    };
    for (int i = 0; i <= top; ++i) {
      if (F.f[i].rank() == 0) continue;
      const auto [lo_it, hi_it] =
          std::minmax_element(F.f[i].gdeg.begin(), F.f[i].gdeg.end());
      for (int d = *lo_it + M.lvl.front(); d <= *hi_it + M.lvl.back(); ++d) {
        int64_t cols = tensor_piece(F, M, i, d).dim;
        if (cols == 0) continue;
        h[i] += cols - rank_at(i, d) - rank_at(i + 1, d);
      }
    }
    return h;
  }

  std::vector<int64_t> r(top + 3, 0);
  for (int i = 1; i <= top + 1; ++i)
    if (F.f[i].rank() > 0 && F.f[i - 1].rank() > 0)
      r[i] = rank_of(tensor_full(F, M, i), field);
  for (int i = 0; i <= top; ++i)
    h[i] = static_cast<int64_t>(F.f[i].rank()) * M.n - r[i] - r[i + 1];
  return h;
}

std::vector<int64_t> tensor_homology_map(const MinimalResolution& F,
                                         const ModuleMap& g, int top) {
  require_equivariant(g);
  if (F.A != g.from.A || F.A != g.to.A)
    throw PreconditionViolated(
        "tensor_homology_map: map and resolution algebras differ");
  if (top < 0) return {};
  if (F.depth() < top + 1)
    throw DepthExceeded("tensor_homology_map: resolution too shallow");
  const Fp& field = F.A->F;
  std::vector<int64_t> out(top + 1, 0);

  bool level_ok = F.graded && g.from.graded && g.to.graded;
  if (level_ok)
    for (int r = 0; r < g.to.n && level_ok; ++r)
      for (int c = 0; c < g.from.n; ++c)
        if (g.f.at(r, c) != 0 && g.to.lvl[r] != g.from.lvl[c]) {
          level_ok = false;
          break;
        }

  if (level_ok) {
    if (g.from.n == 0) return out;
    for (int i = 0; i <= top; ++i) {
      if (F.f[i].rank() == 0) continue;
      const auto [lo_it, hi_it] =
          std::minmax_element(F.f[i].gdeg.begin(), F.f[i].gdeg.end());
      for (int d = *lo_it + g.from.lvl.front();
           d <= *hi_it + g.from.lvl.back(); ++d) {
        PieceLayout cm = tensor_piece(F, g.from, i, d);
        if (cm.dim == 0) continue;
        Mat dm = (i == 0) ? Mat(0, cm.dim) : tensor_block(F, g.from, i, d);
        Mat Z = kernel_basis(dm, field);
        if (Z.cols() == 0) continue;
        PieceLayout cn = tensor_piece(F, g.to, i, d);
        Mat bn = (F.f[i + 1].rank() == 0 || cn.dim == 0)
                     ? Mat(0, cn.dim)
                     : transpose(tensor_block(F, g.to, i + 1, d));
        Mat mapped(Z.cols(), cn.dim);
        for (int k = 0; k < Z.cols(); ++k)
          for (int h = 0; h < F.f[i].rank(); ++h) {
            if (cm.seg[h].len == 0 || cn.seg[h].len == 0) continue;
            const int Dh = F.f[i].gdeg[h];
            const int flo = g.from.loff(d - Dh), tlo = g.to.loff(d - Dh);
            for (int r = 0; r < cn.seg[h].len; ++r) {
              uint64_t acc = 0;
              for (int u = 0; u < cm.seg[h].len; ++u) {
                acc += static_cast<uint64_t>(g.f.at(tlo + r, flo + u)) *
                       Z.at(cm.seg[h].off + u, k);
                if (acc >= kAccGuard) acc %= field.p();
              }
              mapped.at(k, cn.seg[h].off + r) =
                  static_cast<uint32_t>(acc % field.p());
            }
          }
        int64_t base = rank_of(bn, field);
        out[i] += rank_of(vstack(bn, mapped), field) - base;
      }
    }
    return out;
  }

  for (int i = 0; i <= top; ++i) {
    const int cm = F.f[i].rank() * g.from.n;
    const int cn = F.f[i].rank() * g.to.n;
    if (cm == 0) continue;
    Mat dm = (i == 0 || F.f[i - 1].rank() == 0)
                 ? Mat(0, cm)
                 : tensor_full(F, g.from, i);
    Mat Z = kernel_basis(dm, field);
    if (Z.cols() == 0) continue;
    Mat bn = (F.f[i + 1].rank() == 0 || cn == 0)
                 ? Mat(0, cn)
                 : transpose(tensor_full(F, g.to, i + 1));
    Mat mapped(Z.cols(), cn);
    for (int k = 0; k < Z.cols(); ++k)
      for (int h = 0; h < F.f[i].rank(); ++h)
        for (int r = 0; r < g.to.n; ++r) {
          uint64_t acc = 0;
          for (int u = 0; u < g.from.n; ++u) {
            acc += static_cast<uint64_t>(g.f.at(r, u)) *
                   Z.at(h * g.from.n + u, k);
            if (acc >= kAccGuard) acc %= field.p();
          }
          mapped.at(k, h * g.to.n + r) =
              static_cast<uint32_t>(acc % field.p());
        }
    int64_t base = rank_of(bn, field);
    out[i] += rank_of(vstack(bn, mapped), field) - base;
  }
  return out;
}

ZSeries poincare_series(const MinimalResolution& F, const FModule& M,
                        int order) {
  std::vector<int64_t> h = tensor_homology(F, M, order);
  ZSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = h[i];
  return s;
}

}  // namespace gkoszul
