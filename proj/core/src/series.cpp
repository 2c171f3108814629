#include "gkoszul/series.hpp"

#include <algorithm>

namespace gkoszul {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error("integer overflow in series coefficient");
  return r;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("integer overflow in series coefficient");
  return r;
}

}  // namespace

ZSeries ZSeries::one(int order) {
  ZSeries s(order);
  s[0] = 1;
  return s;
}

ZSeries ZSeries::monomial(int k, int64_t coeff, int order) {
  ZSeries s(order);
  if (k <= order) s[k] = coeff;
  return s;
}

ZSeries ZSeries::add(const ZSeries& o) const {
  int d = std::min(order(), o.order());
  ZSeries s(d);
  for (int k = 0; k <= d; ++k) s[k] = checked_add(c_[k], o[k]);
  return s;
}

ZSeries ZSeries::sub(const ZSeries& o) const {
  int d = std::min(order(), o.order());
  ZSeries s(d);
  for (int k = 0; k <= d; ++k) s[k] = checked_add(c_[k], -o[k]);
  return s;
}

ZSeries ZSeries::mul(const ZSeries& o) const {
  int d = std::min(order(), o.order());
  ZSeries s(d);
  for (int i = 0; i <= d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= d; ++j)
      s[i + j] = checked_add(s[i + j], checked_mul(c_[i], o[j]));
  }
  return s;
}

ZSeries ZSeries::scale(int64_t c) const {
  ZSeries s(order());
  for (int k = 0; k <= order(); ++k) s[k] = checked_mul(c_[k], c);
  return s;
}

ZSeries ZSeries::shift(int k) const {
  ZSeries s(order());
  for (int j = 0; j + k <= order(); ++j) s[j + k] = c_[j];
  return s;
}

ZSeries ZSeries::div(const ZSeries& d) const {
  if (d.order() < 0 || (d[0] != 1 && d[0] != -1))
    throw NonUnitDenominator("series division needs constant term +1 or -1, got " +
                             (d.order() >= 0 ? std::to_string(d[0]) : std::string("empty")));
  int n = std::min(order(), d.order());
  ZSeries q(n);
  for (int k = 0; k <= n; ++k) {
    int64_t acc = c_[k];
    for (int j = 1; j <= k; ++j)
      acc = checked_add(acc, -checked_mul(d[j], q[k - j]));
    q[k] = d[0] == 1 ? acc : -acc;
  }
  return q;
}

ZSeries ZSeries::truncate(int order) const {
  ZSeries s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = c_[k];
  return s;
}

bool ZSeries::is_zero() const { return first_nonzero() < 0; }

int ZSeries::first_nonzero() const {
  for (int k = 0; k <= order(); ++k)
    if (c_[k] != 0) return k;
  return -1;
}

std::string ZSeries::str() const {
  std::string s = "(";
  for (int k = 0; k <= order(); ++k) {
    if (k) s += ", ";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

ZSeries binom_pow(int e, int order) {
  ZSeries s = ZSeries::one(order);
  ZSeries b(order);
  b[0] = 1;
  if (order >= 1) b[1] = 1;
  for (int i = 0; i < e; ++i) s = s.mul(b);
  return s;
}

}  // namespace gkoszul
