#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gkoszul/fp.hpp"
#include "gkoszul/matrix.hpp"
#include "gkoszul/monomial.hpp"
#include "gkoszul/polynomial.hpp"
#include "gkoszul/ring.hpp"

namespace gkoszul {

// An artinian local algebra R = Q/J presented by a validated RingPresentation,
// together with the finite data the homological machinery needs: a monomial
// basis compatible with the powers of the maximal ideal, the Hilbert function
// of the associated graded ring, and multiplication operators.
//
// The basis is ordered by degree; basis elements of degree >= d span m^d, so
// coordinate slices [aoff(d), n) realize the power m^d for every d.
struct Algebra {
  RingPresentation pres;
  Fp F{101};
  int e = 0;             // embedding dimension
  int s = 0;             // top socle degree: m^s != 0 = m^{s+1}
  bool graded = false;   // all defining generators homogeneous
  int lambda = 0;        // length, = basis.size()

  std::vector<Mono> basis;   // monomial basis, degree ascending, canonical order
  std::vector<int> bdeg;     // bdeg[i] = deg basis[i]
  std::vector<int> off;      // off[d] = first basis index of degree d; off[s+1] = n
  std::vector<int> hilbert;  // hilbert[d] = dim m^d/m^{d+1}, d = 0..s

  std::vector<Mat> mvar;  // mvar[v] = multiplication by the variable x_v, n x n
  std::vector<Mat> mbas;  // mbas[i] = multiplication by basis[i]

  // Normal forms of the reduced (non-basis) monomials of degree <= s, as
  // coordinate vectors over `basis`.  Monomials of degree > s vanish.
  std::map<Mono, std::vector<uint32_t>, MonoBefore> nf;

  int n() const { return static_cast<int>(basis.size()); }

  // First basis index of degree d, clamped into [0, n].
  int aoff(int d) const;
  // Number of basis elements of degree d (0 outside 0..s).
  int adim(int d) const;

  // Coordinates of the image of a monomial / polynomial in R.
  std::vector<uint32_t> nf_mono(const Mono& m) const;
  std::vector<uint32_t> nf_poly(const Poly& f) const;
};

// Builds the algebra from a presentation.  With an explicit truncation T the
// presented ring is Q/(J + n^T) and construction always succeeds; without one
// the scan window is derived from the generator degrees and NotArtinian is
// thrown if no power of the maximal ideal vanishes inside it (one enlargement
// retry).
Algebra build_algebra(const RingPresentation& pres);

// Rows span the socle {x in R : m x = 0}.
Mat socle_basis(const Algebra& A);

// Smallest j with dim m^j/m^{j+1} < dim S_j, i.e. the first degree where the
// defining ideal is visible.  Always in [2, s+1].
int v_of_R(const Algebra& A);

// Whether R is t-homogeneous: t <= v(R) and J meet n^{t+1} contained in nJ.
// The membership test runs in the window of degrees <= s+2, where it is exact.
// Requires t >= 2.
bool is_t_homogeneous(const Algebra& A, int t);

struct GradedParts {
  Algebra gr;                     // the associated graded ring of R
  std::vector<int> istar_degrees; // degrees of a minimal generating set of the
                                  // ideal of leading forms, ascending
};

// Computes the associated graded ring gr R = S/(leading forms of J) together
// with the minimal generator degrees of that ideal.
GradedParts assoc_graded(const Algebra& A);

// The degree-d contraction matrix of a dual form of degree s: rows indexed by
// monomials of degree s-d, columns by monomials of degree d, entry = the
// coefficient of the product monomial in the form.  Its rank is the Hilbert
// value of the apolar algebra in degree d; its kernel is the degree-d piece of
// the annihilator.
Mat catalecticant(const Poly& dual_form, int d, const Fp& F);

// Presentation of the apolar algebra of a homogeneous dual form of degree
// >= 2: variables `vars`, a minimal generating set of the annihilator ideal,
// truncation s+2.  Throws ZeroForm / DegenerateForm / PreconditionViolated.
RingPresentation apolar_presentation(const Poly& dual_form, uint32_t p,
                                     const std::vector<std::string>& vars);

// Dense form of degree s in e dual variables with coefficients rng() mod p.
Poly random_dual_form(int e, int s, uint32_t p, std::mt19937& rng);

struct ConstructResult {
  std::optional<Algebra> alg;  // empty if no compressed instance was found
  Poly dual_form;              // the successful (or last attempted) form
  int attempts = 0;
};

// Draws random dual forms from a single seeded stream until the apolar
// algebra is compressed, giving up after `retries` attempts.
ConstructResult construct_compressed(int e, int s, uint32_t p, uint32_t seed,
                                     int retries = 16);

struct CompressedReport {
  bool compressed = false;
  int e = 0;
  int s = 0;
  long long length = 0;
  long long max_length = 0;  // sum over i = 0..s of min(dim S_i, dim S_{s-i})
  int socle_dim = 0;
};

CompressedReport compressed_report(const Algebra& A);

// Socle-degree invariants used throughout: t = ceil((s+1)/2), r = s+1-t.
int t_of_socle(int s);
int r_of_socle(int s);

// x, y, z, w for e <= 4, else x1..xe; dual variables are the uppercase forms.
std::vector<std::string> default_variables(int e);
std::vector<std::string> dual_variables(int e);

}  // namespace gkoszul
