#include "gkoszul/monomial.hpp"

#include <cassert>
#include <numeric>

namespace gkoszul {

int Mono::deg() const {
  int d = 0;
  for (uint32_t k : e) d += static_cast<int>(k);
  return d;
}

Mono Mono::times(const Mono& o) const {
  assert(nvars() == o.nvars());
  Mono m = *this;
  for (int i = 0; i < nvars(); ++i) m.e[i] += o.e[i];
  return m;
}

Mono Mono::times_var(int v, uint32_t k) const {
  Mono m = *this;
  m.e[v] += k;
  return m;
}

bool Mono::divides(const Mono& o) const {
  assert(nvars() == o.nvars());
  for (int i = 0; i < nvars(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::quotient_of(const Mono& o) const {
  assert(divides(o));
  Mono m(nvars());
  for (int i = 0; i < nvars(); ++i) m.e[i] = o.e[i] - e[i];
  return m;
}

bool mono_before(const Mono& a, const Mono& b) {
  assert(a.nvars() == b.nvars());
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  // Same degree: a before b iff a > b in reverse lex, i.e. the rightmost
  // variable where they differ has a smaller exponent in a.
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

std::vector<Mono> monomials_of_degree(int nvars, int d) {
  std::vector<Mono> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Mono(0));
    return out;
  }
  if (nvars == 1) {
    Mono m(1);
    m.e[0] = d;
    out.push_back(m);
    return out;
  }
  // The last variable's exponent increases along the canonical order.
  for (int k = 0; k <= d; ++k) {
    std::vector<Mono> prefix = monomials_of_degree(nvars - 1, d - k);
    for (const Mono& pm : prefix) {
      Mono m(nvars);
      for (int i = 0; i < nvars - 1; ++i) m.e[i] = pm.e[i];
      m.e[nvars - 1] = static_cast<uint32_t>(k);
      out.push_back(m);
    }
  }
  return out;
}

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i);
    r /= i;
  }
  return r;
}

int64_t count_monomials(int nvars, int d) {
  if (d < 0) return 0;
  return binomial(nvars - 1 + d, nvars - 1);
}

}  // namespace gkoszul
