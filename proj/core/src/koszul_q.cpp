#include "gkoszul/koszul_q.hpp"

#include <algorithm>
#include <map>

#include "gkoszul/errors.hpp"
#include "gkoszul/monomial.hpp"

namespace gkoszul {

int VarModule::loff(int d) const {
  return static_cast<int>(std::lower_bound(lvl.begin(), lvl.end(), d) -
                          lvl.begin());
}

int VarModule::ldim(int d) const { return loff(d + 1) - loff(d); }

VarModule var_module(const FModule& M) {
  VarModule V;
  V.e = M.A->e;
  V.n = M.n;
  V.graded = M.graded;
  V.lvl = M.lvl;
  V.x = M.act;
  return V;
}

VarModule truncated_power_vm(int e, int j, int N) {
  if (e < 1 || j < 0 || N <= j)
    throw PreconditionViolated("truncated_power_vm: need e >= 1, 0 <= j < N");
  VarModule V;
  V.e = e;
  V.graded = true;

  std::vector<Mono> basis;
  std::map<Mono, int, MonoBefore> index;
  for (int d = j; d < N; ++d) {
    for (const Mono& m : monomials_of_degree(e, d)) {
      index.emplace(m, static_cast<int>(basis.size()));
      basis.push_back(m);
      V.lvl.push_back(d);
    }
  }
  V.n = static_cast<int>(basis.size());
  V.x.assign(e, Mat(V.n, V.n));
  for (int v = 0; v < e; ++v)
    for (int c = 0; c < V.n; ++c) {
      Mono shifted = basis[c].times_var(v);
      auto it = index.find(shifted);
      if (it != index.end()) V.x[v].at(it->second, c) = 1;
    }
  return V;
}

namespace {

// Subsets of {0..e-1} of size i as bitmasks, in lexicographic order of the
// ascending element lists, plus the inverse lookup.
struct SubsetTable {
  std::vector<std::vector<uint32_t>> masks;  // masks[i]
  std::vector<std::map<uint32_t, int>> index;

  explicit SubsetTable(int e) : masks(e + 1), index(e + 1) {
    std::vector<int> pick;
    build(e, 0, 0, pick);
    for (int i = 0; i <= e; ++i)
      for (int k = 0; k < static_cast<int>(masks[i].size()); ++k)
        index[i].emplace(masks[i][k], k);
  }

 private:
  void build(int e, int next, uint32_t mask, std::vector<int>& pick) {
    masks[static_cast<int>(pick.size())].push_back(mask);
    for (int u = next; u < e; ++u) {
      pick.push_back(u);
      build(e, u + 1, mask | (1u << u), pick);
      pick.pop_back();
    }
  }
};

std::vector<int> mask_elements(uint32_t mask) {
  std::vector<int> out;
  for (int u = 0; mask; ++u, mask >>= 1)
    if (mask & 1u) out.push_back(u);
  return out;
}

// The i-th Koszul differential K_i -> K_{i-1} as a dense matrix.
Mat koszul_boundary(const VarModule& M, const SubsetTable& T, int i,
                    const Fp& F) {
  const int n = M.n;
  const auto& srcs = T.masks[i];
  const auto& dsts = T.masks[i - 1];
  Mat d(static_cast<int>(dsts.size()) * n, static_cast<int>(srcs.size()) * n);
  for (int sc = 0; sc < static_cast<int>(srcs.size()); ++sc) {
    std::vector<int> elems = mask_elements(srcs[sc]);
    for (int l = 0; l < static_cast<int>(elems.size()); ++l) {
      int u = elems[l];
      int dst = T.index[i - 1].at(srcs[sc] & ~(1u << u));
      uint32_t sign = (l % 2 == 0) ? 1 : F.p() - 1;
      const Mat& xu = M.x[u];
      for (int r = 0; r < n; ++r) {
        const uint32_t* row = xu.row(r);
        for (int c = 0; c < n; ++c)
          if (row[c]) {
            uint32_t& cell = d.at(dst * n + r, sc * n + c);
            cell = F.add(cell, F.mul(sign, row[c]));
          }
      }
    }
  }
  return d;
}

// Restriction of the i-th differential to internal degree deg: columns are
// pairs (S, m) with |S| = i and lvl(m) = deg - i, rows pairs (T, m') with
// lvl(m') = deg - i + 1.  Valid for graded modules, where each x_v raises
// lvl by exactly one.
Mat koszul_boundary_slice(const VarModule& M, const SubsetTable& T, int i,
                          int deg, const Fp& F) {
  const auto& srcs = T.masks[i];
  const auto& dsts = T.masks[i - 1];
  const int clo = M.loff(deg - i), cn = M.ldim(deg - i);
  const int rlo = M.loff(deg - i + 1), rn = M.ldim(deg - i + 1);
  Mat d(static_cast<int>(dsts.size()) * rn, static_cast<int>(srcs.size()) * cn);
  if (cn == 0 || rn == 0) return d;
  for (int sc = 0; sc < static_cast<int>(srcs.size()); ++sc) {
    std::vector<int> elems = mask_elements(srcs[sc]);
    for (int l = 0; l < static_cast<int>(elems.size()); ++l) {
      int u = elems[l];
      int dst = T.index[i - 1].at(srcs[sc] & ~(1u << u));
      uint32_t sign = (l % 2 == 0) ? 1 : F.p() - 1;
      const Mat& xu = M.x[u];
      for (int r = 0; r < rn; ++r) {
        const uint32_t* row = xu.row(rlo + r);
        for (int c = 0; c < cn; ++c)
          if (row[clo + c]) {
            uint32_t& cell = d.at(dst * rn + r, sc * cn + c);
            cell = F.add(cell, F.mul(sign, row[clo + c]));
          }
      }
    }
  }
  return d;
}

}  // namespace

std::vector<int64_t> koszul_ranks(const VarModule& M, const Fp& F,
                                  int cutoff) {
  const int e = M.e;
  SubsetTable T(e);
  std::vector<int64_t> h(e + 1, 0);

  if (cutoff < 0) {
    // Global: h_i = dim K_i - rank d_i - rank d_{i+1}.
    std::vector<int64_t> r(e + 2, 0);
    for (int i = 1; i <= e; ++i)
      r[i] = rank_of(koszul_boundary(M, T, i, F), F);
    for (int i = 0; i <= e; ++i)
      h[i] = static_cast<int64_t>(T.masks[i].size()) * M.n - r[i] - r[i + 1];
    return h;
  }

  if (!M.graded)
    throw PreconditionViolated("koszul_ranks: cutoff needs a graded module");
  if (M.n == 0) return h;
  const int top = M.lvl.back();
  for (int i = 0; i <= e; ++i) {
    for (int deg = i; deg < cutoff && deg <= top + i; ++deg) {
      int64_t cols =
          static_cast<int64_t>(T.masks[i].size()) * M.ldim(deg - i);
      if (cols == 0) continue;
      int64_t ri = (i == 0) ? 0
                            : rank_of(koszul_boundary_slice(M, T, i, deg, F),
                                      F);
      int64_t rnext =
          (i == e) ? 0
                   : rank_of(koszul_boundary_slice(M, T, i + 1, deg, F), F);
      h[i] += cols - ri - rnext;
    }
  }
  return h;
}

std::vector<int64_t> tor_q(const FModule& M) {
  return koszul_ranks(var_module(M), M.A->F,
                      M.graded ? M.A->s + M.A->e + 2 : -1);
}

ZSeries tor_q_series(const FModule& M, int order) {
  std::vector<int64_t> h = tor_q(M);
  ZSeries out(order);
  for (int i = 0; i <= M.A->e && i <= order; ++i) out[i] = h[i];
  return out;
}

std::vector<int64_t> tor_q_map(const ModuleMap& f) {
  require_equivariant(f);
  const Fp& F = f.from.A->F;
  const int e = f.from.A->e;
  VarModule VM = var_module(f.from);
  VarModule VN = var_module(f.to);
  SubsetTable T(e);

  std::vector<int64_t> out(e + 1, 0);
  for (int i = 0; i <= e; ++i) {
    const int nsub = static_cast<int>(T.masks[i].size());
    // Cycles of the source.
    Mat dM = (i == 0) ? Mat(0, nsub * VM.n) : koszul_boundary(VM, T, i, F);
    Mat Z = kernel_basis(dM, F);  // columns
    // Rows spanning the boundaries of the target.
    Mat BN = (i == e) ? Mat(0, nsub * VN.n)
                      : transpose(koszul_boundary(VN, T, i + 1, F));
    // Map the cycles through id (x) f and stack as rows.
    Mat mapped(Z.cols(), nsub * VN.n);
    for (int k = 0; k < Z.cols(); ++k)
      for (int sc = 0; sc < nsub; ++sc)
        for (int rN = 0; rN < VN.n; ++rN) {
          uint64_t acc = 0;
          const uint32_t* frow = f.f.row(rN);
          for (int cM = 0; cM < VM.n; ++cM)
            if (frow[cM])
              acc += static_cast<uint64_t>(frow[cM]) * Z.at(sc * VM.n + cM, k);
          mapped.at(k, sc * VN.n + rN) = static_cast<uint32_t>(acc % F.p());
        }
    int64_t base = rank_of(BN, F);
    out[i] = rank_of(vstack(BN, mapped), F) - base;
  }
  return out;
}

ZSeries power_ideal_q_series(int e, int j, int order, const Fp& F) {
  if (j < 1) throw PreconditionViolated("power_ideal_q_series: need j >= 1");
  int N = j + e + 2;
  std::vector<int64_t> h = koszul_ranks(truncated_power_vm(e, j, N), F, N);
  ZSeries out(order);
  for (int i = 0; i <= e && i <= order; ++i) out[i] = h[i];
  return out;
}

ZSeries d_R_series(const Algebra& A, int order) {
  ZSeries pqr = tor_q_series(module_R(A), order);
  ZSeries one = ZSeries::one(order);
  ZSeries d = one.sub(pqr.sub(one).shift(1));
  ZSeries tail = ZSeries::monomial(A.e + 1, 1, order)
                     .add(ZSeries::monomial(A.e + 2, 1, order));
  return d.add(tail);
}

QPowerIdentities q_power_identities(const Algebra& A) {
  CompressedReport rep = compressed_report(A);
  if (!rep.compressed || rep.socle_dim != 1 || A.s < 2 || A.s == 3)
    throw PreconditionViolated(
        "q_power_identities: needs a compressed algebra with one-dimensional "
        "socle and socle degree >= 2 and != 3");
  const int e = A.e, s = A.s;
  const int t = t_of_socle(s), r = r_of_socle(s);
  const int order = e + 3;

  QPowerIdentities out;
  ZSeries pqr = tor_q_series(module_R(A), order);
  ZSeries one = ZSeries::one(order);
  std::vector<ZSeries> pm(s + 2, ZSeries(order));  // P^Q_{m^j}
  for (int j = 0; j <= s + 1; ++j)
    pm[j] = tor_q_series(module_power(A, j), order);

  for (int j = 1; j <= t - 1; ++j) {
    ZSeries rhs =
        pqr.add(power_ideal_q_series(e, j, order, A.F)).sub(one);
    if (!(pm[j] == rhs)) {
      out.pass = false;
      out.failed_split.push_back(j);
    }
  }

  ZSeries pk = binom_pow(e, order);
  for (int j = r; j <= s; ++j) {
    ZSeries lhs =
        pm[j].sub(pk.scale(A.hilbert[j])).add(pm[j + 1].shift(1));
    ZSeries rhs =
        (j == s) ? ZSeries(order)
                 : ZSeries::monomial(e, 1, order).add(
                       ZSeries::monomial(e + 1, 1, order));
    if (!(lhs == rhs)) {
      out.pass = false;
      out.failed_socle.push_back(j);
    }
  }
  return out;
}

}  // namespace gkoszul
