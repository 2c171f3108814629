#pragma once
// Monomials in a fixed number of variables, ordered by total degree and then
// by graded reverse lexicographic order.  The enumeration order produced by
// monomials_of_degree is the canonical listing used for every matrix built on
// monomial coordinates.

#include <cstdint>
#include <vector>

namespace gkoszul {

struct Mono {
  std::vector<uint32_t> e;  // exponent per variable

  Mono() = default;
  explicit Mono(int nvars) : e(nvars, 0) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int deg() const;
  bool is_one() const { return deg() == 0; }

  Mono times(const Mono& o) const;
  Mono times_var(int v, uint32_t k = 1) const;
  bool divides(const Mono& o) const;
  // o / *this, assuming divides(o).
  Mono quotient_of(const Mono& o) const;

  bool operator==(const Mono&) const = default;
};

// Strict total order: lower total degree first; within a degree, reverse
// lexicographically larger monomials first (x1^d is the first monomial of its
// degree, xn^d the last).  This matches the enumeration order below.
bool mono_before(const Mono& a, const Mono& b);

struct MonoBefore {
  bool operator()(const Mono& a, const Mono& b) const { return mono_before(a, b); }
};

// All monomials of total degree d in the canonical order.
std::vector<Mono> monomials_of_degree(int nvars, int d);

// C(nvars-1+d, nvars-1), the number of such monomials.
int64_t count_monomials(int nvars, int d);

// Binomial coefficient with int64 result (small arguments only).
int64_t binomial(int n, int k);

}  // namespace gkoszul
