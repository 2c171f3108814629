#include "gkoszul/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "gkoszul/errors.hpp"

namespace gkoszul {

namespace {

// Coordinates on all monomials of degree 0..K, in the canonical order.
struct Window {
  int nvars;
  int K;
  std::vector<Mono> monos;
  std::vector<int> deg;  // degree of each column
  std::vector<int> off;  // off[d] = first column of degree d; off[K+1] = size
  std::map<Mono, int, MonoBefore> index;

  Window(int nvars_, int K_) : nvars(nvars_), K(K_) {
    off.assign(K + 2, 0);
    for (int d = 0; d <= K; ++d) {
      off[d] = static_cast<int>(monos.size());
      for (Mono& m : monomials_of_degree(nvars, d)) {
        deg.push_back(d);
        monos.push_back(std::move(m));
      }
    }
    off[K + 1] = static_cast<int>(monos.size());
    for (int i = 0; i < static_cast<int>(monos.size()); ++i)
      index.emplace(monos[i], i);
  }

  int size() const { return static_cast<int>(monos.size()); }
};

// Rows spanning (n^a * (J + n^T) + n^{>K}) / n^{>K} in window coordinates,
// where J is generated by the presentation's generators, T is the optional
// truncation, and a = min_shift (0 for the ideal itself, 1 for n * ideal).
Mat ideal_window_rows(const RingPresentation& pres, const Window& W,
                      int min_shift) {
  std::vector<std::vector<uint32_t>> rows;
  for (const Poly& g : pres.generators) {
    if (g.is_zero()) continue;
    int og = g.min_deg();
    for (int dm = min_shift; dm + og <= W.K; ++dm) {
      for (const Mono& m : monomials_of_degree(pres.nvars(), dm)) {
        Poly h = g.mul_mono(m).truncate_deg(W.K);
        if (h.is_zero()) continue;
        std::vector<uint32_t> row(W.size(), 0);
        for (const auto& [mono, c] : h.terms()) row[W.index.at(mono)] = c;
        rows.push_back(std::move(row));
      }
    }
  }
  if (pres.truncation) {
    for (int d = *pres.truncation + min_shift; d <= W.K; ++d) {
      for (const Mono& m : monomials_of_degree(pres.nvars(), d)) {
        std::vector<uint32_t> row(W.size(), 0);
        row[W.index.at(m)] = 1;
        rows.push_back(std::move(row));
      }
    }
  }
  Mat a(static_cast<int>(rows.size()), W.size());
  for (int i = 0; i < a.rows(); ++i)
    std::copy(rows[i].begin(), rows[i].end(), a.row(i));
  return a;
}

}  // namespace

int Algebra::aoff(int d) const {
  if (d <= 0) return 0;
  if (d > s) return n();
  return off[d];
}

int Algebra::adim(int d) const {
  if (d < 0 || d > s) return 0;
  return hilbert[d];
}

std::vector<uint32_t> Algebra::nf_mono(const Mono& m) const {
  std::vector<uint32_t> v(basis.size(), 0);
  if (m.nvars() != e) throw PreconditionViolated("monomial in the wrong variable count");
  if (m.deg() > s) return v;
  auto it = nf.find(m);
  if (it != nf.end()) return it->second;
  auto b = std::lower_bound(basis.begin(), basis.end(), m, mono_before);
  if (b == basis.end() || !(*b == m))
    throw Error("internal: monomial neither reduced nor basic");
  v[b - basis.begin()] = 1;
  return v;
}

std::vector<uint32_t> Algebra::nf_poly(const Poly& f) const {
  if (f.nvars() != e) throw PreconditionViolated("polynomial in the wrong variable count");
  std::vector<uint32_t> v(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    if (m.deg() > s) continue;
    std::vector<uint32_t> w = nf_mono(m);
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = F.add(v[i], F.mul(c, w[i]));
  }
  return v;
}

Algebra build_algebra(const RingPresentation& pres) {
  validate_presentation(pres);
  Fp F(pres.field);
  const int e = pres.nvars();

  bool any_gen = false;
  bool graded = true;
  long long degsum = 0;
  for (const Poly& g : pres.generators) {
    if (g.is_zero()) continue;
    any_gen = true;
    degsum += g.max_deg();
    if (!g.homogeneous()) graded = false;
  }

  int N;
  if (pres.truncation) {
    N = *pres.truncation;
  } else {
    if (!any_gen)
      throw NotArtinian("no generators and no truncation: the quotient is the whole series ring");
    if (degsum + 2 > 512)
      throw NotArtinian("generator degrees put the scan window beyond any workable size");
    N = static_cast<int>(degsum) + 2;
  }

  // One scan attempt in the window of degrees <= K.  Returns nothing when no
  // power of the maximal ideal vanishes inside the window.
  auto attempt = [&](int K) -> std::optional<Algebra> {
    Window W(e, K);
    Rref R = rref(ideal_window_rows(pres, W, 0), F);

    std::vector<char> is_pivot(W.size(), 0);
    for (int pc : R.pivot) is_pivot[pc] = 1;
    std::vector<int> quot(K + 1, 0);
    for (int d = 0; d <= K; ++d) {
      quot[d] = W.off[d + 1] - W.off[d];
      for (int j = W.off[d]; j < W.off[d + 1]; ++j) quot[d] -= is_pivot[j];
    }

    int dstar = -1;
    for (int d = 0; d <= K; ++d)
      if (quot[d] == 0) { dstar = d; break; }
    if (dstar < 0) return std::nullopt;
    for (int d = dstar; d <= K; ++d)
      if (quot[d] != 0)
        throw Error("internal: quotient dimensions regrow after vanishing");

    Algebra A;
    A.pres = pres;
    A.F = F;
    A.e = e;
    A.s = dstar - 1;
    A.graded = graded;

    std::vector<int> col_basis_index(W.size(), -1);
    A.off.assign(A.s + 2, 0);
    for (int d = 0; d <= A.s; ++d) {
      A.off[d] = static_cast<int>(A.basis.size());
      for (int j = W.off[d]; j < W.off[d + 1]; ++j) {
        if (is_pivot[j]) continue;
        col_basis_index[j] = static_cast<int>(A.basis.size());
        A.basis.push_back(W.monos[j]);
        A.bdeg.push_back(d);
      }
    }
    A.off[A.s + 1] = static_cast<int>(A.basis.size());
    A.lambda = static_cast<int>(A.basis.size());
    A.hilbert.assign(quot.begin(), quot.begin() + A.s + 1);

    const int n = A.lambda;
    for (int i = 0; i < R.rank(); ++i) {
      int pc = R.pivot[i];
      if (W.deg[pc] > A.s) continue;
      std::vector<uint32_t> v(n, 0);
      for (int j = pc + 1; j < W.size(); ++j) {
        uint32_t c = R.m.at(i, j);
        if (c == 0) continue;
        // every non-pivot column of degree <= s is a basis column, and the
        // RREF clears the other pivot columns, so this lookup cannot miss
        if (col_basis_index[j] < 0)
          throw Error("internal: reduced row meets a non-basis column");
        v[col_basis_index[j]] = F.neg(c);
      }
      A.nf.emplace(W.monos[pc], std::move(v));
    }

    A.mvar.reserve(e);
    for (int v = 0; v < e; ++v) {
      Mat Mv(n, n);
      for (int i = 0; i < n; ++i) {
        std::vector<uint32_t> col = A.nf_mono(A.basis[i].times_var(v));
        for (int r = 0; r < n; ++r) Mv.at(r, i) = col[r];
      }
      A.mvar.push_back(std::move(Mv));
    }

    A.mbas.reserve(n);
    for (int i = 0; i < n; ++i) {
      Mat P = Mat::identity(n);
      for (int v = 0; v < e; ++v)
        for (uint32_t k = 0; k < A.basis[i].e[v]; ++k) P = mul(A.mvar[v], P, F);
      A.mbas.push_back(std::move(P));
    }
    return A;
  };

  if (pres.truncation) {
    std::optional<Algebra> A = attempt(N);
    if (!A) throw Error("internal: truncated scan found no vanishing power");
    return *std::move(A);
  }
  if (std::optional<Algebra> A = attempt(N)) return *std::move(A);
  if (std::optional<Algebra> A = attempt(N + 4)) return *std::move(A);
  throw NotArtinian("no power of the maximal ideal vanishes within the scan window");
}

Mat socle_basis(const Algebra& A) {
  Mat st = A.mvar[0];
  for (int v = 1; v < A.e; ++v) st = vstack(st, A.mvar[v]);
  return transpose(kernel_basis(st, A.F));
}

int v_of_R(const Algebra& A) {
  for (int j = 2; j <= A.s + 1; ++j)
    if (A.adim(j) < count_monomials(A.e, j)) return j;
  throw Error("internal: Hilbert function never drops");
}

bool is_t_homogeneous(const Algebra& A, int t) {
  if (t < 2) throw PreconditionViolated("t-homogeneity is defined for t >= 2");
  if (t > v_of_R(A)) return false;

  // Exactness of the window: n^{s+2} is contained in n*J because n^{s+1} is
  // contained in J, so membership mod degrees > s+2 decides membership.
  const int K = A.s + 2;
  Window W(A.e, K);
  Rref ideal = rref(ideal_window_rows(A.pres, W, 0), A.F);
  Mat nideal = ideal_window_rows(A.pres, W, 1);

  int high = 0;
  for (int i = 0; i < ideal.rank(); ++i)
    if (W.deg[ideal.pivot[i]] >= t + 1) ++high;
  if (high == 0) return true;
  // Rows with pivot degree >= t+1 span (J meet n^{t+1}) in the window: they
  // lie in it (supported in degrees > t by echelon shape), and any element of
  // it reduces to zero against them alone.
  Mat H(high, W.size());
  int r = 0;
  for (int i = 0; i < ideal.rank(); ++i) {
    if (W.deg[ideal.pivot[i]] < t + 1) continue;
    std::copy(ideal.m.row(i), ideal.m.row(i) + W.size(), H.row(r++));
  }

  int base = rank_of(nideal, A.F);
  int joined = rank_of(vstack(nideal, H), A.F);
  return joined == base;
}

namespace {

// Given per-degree kernels part[d] (columns spanning the degree-d piece of a
// graded ideal of the polynomial ring) for d = lo-1..hi, append a minimal
// generating set: in each degree the complement of the span of the shifted
// (d-1)-piece inside the d-piece.
void minimal_generators(const std::vector<Mat>& part, int e, int lo, int hi,
                        const Fp& F, std::vector<Poly>* gens,
                        std::vector<int>* degrees) {
  for (int d = lo; d <= hi; ++d) {
    std::vector<Mono> monos_d = monomials_of_degree(e, d);
    std::vector<Mono> monos_prev = monomials_of_degree(e, d - 1);
    std::map<Mono, int, MonoBefore> idx;
    for (int i = 0; i < static_cast<int>(monos_d.size()); ++i)
      idx.emplace(monos_d[i], i);

    const Mat& prev = part[d - 1];
    Mat shifted(e * prev.cols(), static_cast<int>(monos_d.size()));
    for (int v = 0; v < e; ++v)
      for (int j = 0; j < prev.cols(); ++j)
        for (int i = 0; i < prev.rows(); ++i) {
          uint32_t c = prev.at(i, j);
          if (c) shifted.at(v * prev.cols() + j, idx.at(monos_prev[i].times_var(v))) = c;
        }

    Mat fresh = complement_basis(shifted, transpose(part[d]), F);
    for (int i = 0; i < fresh.rows(); ++i) {
      Poly g(e);
      for (int j = 0; j < fresh.cols(); ++j)
        if (fresh.at(i, j)) g.add_term(monos_d[j], fresh.at(i, j), F);
      gens->push_back(std::move(g));
      degrees->push_back(d);
    }
  }
}

}  // namespace

GradedParts assoc_graded(const Algebra& A) {
  const Fp& F = A.F;
  const int e = A.e, s = A.s;

  // Degree-d piece of the ideal of leading forms: kernel of "degree-d block
  // of the normal form" on the degree-d monomials.
  std::vector<Mat> part(s + 2);
  for (int d = 1; d <= s + 1; ++d) {
    std::vector<Mono> monos = monomials_of_degree(e, d);
    Mat M(A.adim(d), static_cast<int>(monos.size()));
    for (int j = 0; j < M.cols(); ++j) {
      std::vector<uint32_t> v = A.nf_mono(monos[j]);
      for (int i = 0; i < M.rows(); ++i) M.at(i, j) = v[A.aoff(d) + i];
    }
    part[d] = kernel_basis(M, F);
  }

  std::vector<Poly> gens;
  std::vector<int> degrees;
  minimal_generators(part, e, 2, s + 1, F, &gens, &degrees);

  RingPresentation gp;
  gp.field = A.pres.field;
  gp.variables = A.pres.variables;
  gp.generators = std::move(gens);
  gp.truncation = s + 2;

  GradedParts out{build_algebra(gp), std::move(degrees)};
  if (out.gr.hilbert != A.hilbert)
    throw Error("internal: associated graded ring has a different Hilbert function");
  return out;
}

Mat catalecticant(const Poly& dual_form, int d, const Fp& F) {
  (void)F;
  const int e = dual_form.nvars();
  const int s = dual_form.max_deg();
  std::vector<Mono> cols = monomials_of_degree(e, d);
  if (d > s) return Mat(0, static_cast<int>(cols.size()));
  std::vector<Mono> rows = monomials_of_degree(e, s - d);
  Mat M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      M.at(i, j) = dual_form.coeff(rows[i].times(cols[j]));
  return M;
}

RingPresentation apolar_presentation(const Poly& dual_form, uint32_t p,
                                     const std::vector<std::string>& vars) {
  if (dual_form.is_zero()) throw ZeroForm("the dual form is zero");
  if (!dual_form.homogeneous() || dual_form.max_deg() < 2)
    throw PreconditionViolated("the dual form must be homogeneous of degree >= 2");
  Fp F(p);
  const int e = dual_form.nvars();
  if (static_cast<int>(vars.size()) != e)
    throw PreconditionViolated("variable list does not match the dual form");
  const int s = dual_form.max_deg();

  std::vector<Mat> ann(s + 2);
  for (int d = 1; d <= s + 1; ++d)
    ann[d] = kernel_basis(catalecticant(dual_form, d, F), F);
  if (ann[1].cols() > 0)
    throw DegenerateForm("a linear form annihilates the dual form");

  std::vector<Poly> gens;
  std::vector<int> degrees;
  minimal_generators(ann, e, 2, s + 1, F, &gens, &degrees);

  RingPresentation pres;
  pres.field = p;
  pres.variables = vars;
  pres.generators = std::move(gens);
  pres.truncation = s + 2;
  validate_presentation(pres);
  return pres;
}

Poly random_dual_form(int e, int s, uint32_t p, std::mt19937& rng) {
  Fp F(p);
  Poly f(e);
  for (const Mono& m : monomials_of_degree(e, s)) {
    uint32_t c = rng() % p;
    if (c) f.add_term(m, c, F);
  }
  return f;
}

ConstructResult construct_compressed(int e, int s, uint32_t p, uint32_t seed,
                                     int retries) {
  if (e < 1 || s < 2)
    throw PreconditionViolated("need embedding dimension >= 1 and socle degree >= 2");
  std::mt19937 rng(seed);
  ConstructResult out;
  for (int a = 1; a <= retries; ++a) {
    out.attempts = a;
    out.dual_form = random_dual_form(e, s, p, rng);
    try {
      RingPresentation pres = apolar_presentation(out.dual_form, p, default_variables(e));
      Algebra A = build_algebra(pres);
      if (compressed_report(A).compressed) {
        out.alg = std::move(A);
        return out;
      }
    } catch (const ZeroForm&) {
    } catch (const DegenerateForm&) {
    }
  }
  return out;
}

CompressedReport compressed_report(const Algebra& A) {
  CompressedReport r;
  r.e = A.e;
  r.s = A.s;
  r.length = A.lambda;
  for (int i = 0; i <= A.s; ++i)
    r.max_length += std::min(count_monomials(A.e, i), count_monomials(A.e, A.s - i));
  r.socle_dim = socle_basis(A).rows();
  r.compressed = (r.length == r.max_length);
  return r;
}

int t_of_socle(int s) { return (s + 2) / 2; }
int r_of_socle(int s) { return s + 1 - t_of_socle(s); }

std::vector<std::string> default_variables(int e) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> v;
  if (e <= 4) {
    for (int i = 0; i < e; ++i) v.emplace_back(short_names[i]);
  } else {
    for (int i = 1; i <= e; ++i) v.push_back("x" + std::to_string(i));
  }
  return v;
}

std::vector<std::string> dual_variables(int e) {
  std::vector<std::string> v = default_variables(e);
  for (std::string& name : v)
    for (char& c : name)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return v;
}

}  // namespace gkoszul
