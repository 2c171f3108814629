#pragma once
// Arithmetic in the prime field F_p for an odd prime p < 2^31.

#include <cstdint>

#include "gkoszul/errors.hpp"

namespace gkoszul {

class Fp {
 public:
  // Throws PreconditionViolated unless p is an odd prime with 2 < p < 2^31.
  explicit Fp(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;  // both < p < 2^31, no overflow
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  // Multiplicative inverse of a != 0.
  uint32_t inv(uint32_t a) const;
  // Reduce an arbitrary signed integer into [0, p).
  uint32_t reduce(long long v) const;

  static bool is_prime(uint32_t n);

 private:
  uint32_t p_;
};

}  // namespace gkoszul
