#pragma once
// Formal power series in one variable z with exact 64-bit integer
// coefficients, truncated at a fixed order.  All arithmetic is exact;
// overflowing int64 throws rather than wrapping.  Division is defined only
// when the denominator's constant term is +1 or -1, which keeps quotients in
// integer coefficients.

#include <cstdint>
#include <string>
#include <vector>

#include "gkoszul/errors.hpp"

namespace gkoszul {

class ZSeries {
 public:
  ZSeries() = default;
  // Zero series with coefficients for z^0 .. z^order.
  explicit ZSeries(int order) : c_(order + 1, 0) {}
  ZSeries(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  int64_t operator[](int k) const { return c_[k]; }
  int64_t& operator[](int k) { return c_[k]; }
  const std::vector<int64_t>& coeffs() const { return c_; }

  bool operator==(const ZSeries&) const = default;

  static ZSeries one(int order);
  static ZSeries monomial(int k, int64_t coeff, int order);

  ZSeries add(const ZSeries& o) const;
  ZSeries sub(const ZSeries& o) const;
  ZSeries mul(const ZSeries& o) const;
  ZSeries scale(int64_t c) const;
  // Multiply by z^k (coefficients shift up, the top ones fall off).
  ZSeries shift(int k) const;
  // Throws NonUnitDenominator unless d[0] is +1 or -1.
  ZSeries div(const ZSeries& d) const;
  // Truncate (or zero-extend) to the given order.
  ZSeries truncate(int order) const;

  bool is_zero() const;
  // Smallest k with nonzero coefficient, or -1 if zero up to the order.
  int first_nonzero() const;

  std::string str() const;  // "(c0, c1, ..., cD)"

 private:
  std::vector<int64_t> c_;
};

// (1+z)^e truncated at the given order.
ZSeries binom_pow(int e, int order);

}  // namespace gkoszul
