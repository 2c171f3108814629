#include "gkoszul/fp.hpp"

namespace gkoszul {

Fp::Fp(uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw PreconditionViolated("field characteristic must be an odd prime below 2^31, got " +
                               std::to_string(p));
}

uint32_t Fp::inv(uint32_t a) const {
  if (a == 0) throw PreconditionViolated("division by zero in F_p");
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

uint32_t Fp::reduce(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<uint32_t>(m);
}

bool Fp::is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gkoszul
