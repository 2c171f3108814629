#include "gkoszul/series_checks.hpp"

#include <functional>
#include <utility>

#include "gkoszul/errors.hpp"

namespace gkoszul {

namespace {

SeriesCheck compare(ZSeries lhs, ZSeries rhs) {
  SeriesCheck c;
  c.residual = lhs.sub(rhs);
  c.pass = c.residual.is_zero();
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

void require_rs(const Algebra& a, const std::string& who) {
  CompressedReport rep = compressed_report(a);
  if (!rep.compressed || rep.socle_dim != 1 || a.s < 2 || a.s == 3)
    throw PreconditionViolated(
        who + ": needs a compressed Gorenstein algebra with socle degree >= 2 "
              "and != 3");
}

ZSeries to_series(const std::vector<int64_t>& v, int order) {
  ZSeries s(order);
  for (int i = 0; i <= order && i < static_cast<int>(v.size()); ++i) s[i] = v[i];
  return s;
}

bool all_nonneg(const ZSeries& s) {
  for (int i = 0; i <= s.order(); ++i)
    if (s[i] < 0) return false;
  return true;
}

bool zero_mat(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

// Does every product of l variable actions vanish on m?  Walks the product
// tree depth-first, pruning once a partial product is already zero; the tree
// has at most e^l nodes and l is small (t-1 <= 3 at desk scale).
bool products_vanish(const FModule& m, int l) {
  if (m.n == 0) return true;
  if (l <= 0) return false;
  const Algebra& a = *m.A;
  std::function<bool(const Mat&, int)> rec = [&](const Mat& w,
                                                 int left) -> bool {
    if (zero_mat(w)) return true;
    if (left == 0) return false;
    for (int v = 0; v < a.e; ++v)
      if (!rec(mul(m.act[v], w, a.F), left - 1)) return false;
    return true;
  };
  return rec(Mat::identity(m.n), l);
}

ZSeries golod_denominator(const ZSeries& p, int order) {
  return ZSeries::one(order).sub(p.sub(ZSeries::one(order)).shift(1));
}

}  // namespace

SeriesCheck golod_hom_check(InstanceContext& ctx, int j, int order) {
  const Algebra& a = ctx.algebra();
  if (j < 2 || j > a.s + 1)
    throw PreconditionViolated("golod_hom_check: need 2 <= j <= s+1");
  ZSeries lhs = ctx.truncated(j).poincare_k(order);
  ZSeries denom = golod_denominator(ctx.poincare_quot(j, order), order);
  return compare(std::move(lhs), ctx.poincare_k(order).div(denom));
}

SeriesCheck golod_ring_check(InstanceContext& ctx, int order) {
  const Algebra& a = ctx.algebra();
  ZSeries denom =
      golod_denominator(tor_q_series(module_R(a), order), order);
  return compare(ctx.poincare_k(order), binom_pow(a.e, order).div(denom));
}

SeriesCheck inert_check(InstanceContext& ctx, const FModule& m, int order) {
  const Algebra& a = ctx.algebra();
  if (m.A != &a)
    throw PreconditionViolated("inert_check: module over a different algebra");
  ZSeries lhs = ctx.poincare_k(order).mul(tor_q_series(m, order));
  ZSeries rhs = binom_pow(a.e, order)
                    .mul(to_series(ctx.module_betti(m, order), order));
  return compare(std::move(lhs), std::move(rhs));
}

ZSeries hypersurface_series(const FModule& m, int t, int order) {
  if (t < 2) throw PreconditionViolated("hypersurface_series: need t >= 2");
  if (!products_vanish(m, t - 1))
    throw HypothesisFailed(
        "hypersurface_series: module is not annihilated by m^(t-1)");
  ZSeries denom = ZSeries::one(order).sub(ZSeries::monomial(2, 1, order));
  return tor_q_series(m, order).div(denom);
}

SeriesCheck koszul_complex_identity(InstanceContext& ctx, int order) {
  const Algebra& a = ctx.algebra();
  require_rs(a, "koszul_complex_identity");
  return compare(ctx.poincare_k(order).mul(d_R_series(a, order)),
                 binom_pow(a.e, order));
}

TransferReport compressed_transfer_check(InstanceContext& ctx, int order) {
  const Algebra& a = ctx.algebra();
  require_rs(a, "compressed_transfer_check");
  const int t = t_of_socle(a.s);
  const int r = r_of_socle(a.s);
  ZSeries dr = d_R_series(a, order);
  ZSeries socle_term = ZSeries::monomial(a.e, 1, order)
                           .add(ZSeries::monomial(a.e + 1, 1, order));
  TransferReport rep;
  auto record = [&](bool ok, const std::string& what) {
    if (!ok) {
      rep.pass = false;
      rep.failed.push_back(what);
    }
  };
  for (int j = 1; j <= t - 1; ++j) {
    ZSeries lhs = ctx.poincare_quot(j, order).mul(dr);
    record(lhs == tor_q_series(module_quot(a, j), order),
           "quot j=" + std::to_string(j));
  }
  for (int j = 1; j <= a.s + 1; ++j) {
    ZSeries lhs = ctx.poincare_power(j, order).mul(dr);
    ZSeries rhs = tor_q_series(module_power(a, j), order);
    if (j <= r) rhs = rhs.sub(socle_term);
    record(lhs == rhs, "power j=" + std::to_string(j));
  }
  return rep;
}

ASeries a_series(InstanceContext& ctx, int j, int order) {
  const Algebra& a = ctx.algebra();
  if (j < 0 || j > a.s)
    throw PreconditionViolated("a_series: need 0 <= j <= s");
  ZSeries num = ctx.poincare_power(j + 1, order)
                    .shift(1)
                    .sub(ctx.poincare_k(order).scale(a.adim(j)))
                    .add(ctx.poincare_power(j, order));
  ASeries out;
  out.series = num.div(binom_pow(1, order));
  out.nonneg = all_nonneg(out.series);
  return out;
}

ASeries a_series_q(const Algebra& a, int j, int order) {
  if (j < 0 || j > a.s)
    throw PreconditionViolated("a_series_q: need 0 <= j <= s");
  ZSeries num = tor_q_series(module_power(a, j + 1), order)
                    .shift(1)
                    .sub(binom_pow(a.e, order).scale(a.adim(j)))
                    .add(tor_q_series(module_power(a, j), order));
  ASeries out;
  out.series = num.div(binom_pow(1, order));
  out.nonneg = all_nonneg(out.series);
  return out;
}

ASeriesIdentities a_series_identities(InstanceContext& ctx, int order) {
  const Algebra& a = ctx.algebra();
  require_rs(a, "a_series_identities");
  const int t = t_of_socle(a.s);
  const int r = r_of_socle(a.s);
  ZSeries dr = d_R_series(a, order);
  ASeriesIdentities out;
  if (a.s % 2 == 1) {
    out.odd_checked = true;
    ZSeries rhs = a_series_q(a, t - 1, order)
                      .series.sub(ZSeries::monomial(a.e, 1, order))
                      .sub(ZSeries::monomial(a.e + 1, 1, order));
    out.odd = compare(a_series(ctx, t - 1, order).series.mul(dr),
                      std::move(rhs));
    if (!out.odd.pass) out.pass = false;
  }
  for (int j = r + 2; j <= a.s; ++j) {
    ZSeries lhs = a_series(ctx, j - 1, order).series.mul(dr);
    if (!(lhs == ZSeries::monomial(a.e, 1, order))) {
      out.pass = false;
      out.zz_failed.push_back(j);
    }
  }
  return out;
}

NonvanishingReport nonvanishing_predictions(InstanceContext& ctx, int depth) {
  const Algebra& a = ctx.algebra();
  require_rs(a, "nonvanishing_predictions");
  if (depth < 0)
    throw PreconditionViolated("nonvanishing_predictions: depth must be >= 0");
  const int t = t_of_socle(a.s);
  const int r = r_of_socle(a.s);
  NonvanishingReport rep;
  auto run_item = [&](int j, bool need_vanish_below_e) {
    NonvanishingItem it;
    it.j = j;
    ZSeries s = a_series(ctx, j - 1, depth).series;
    it.first_nonzero = s.first_nonzero();
    it.matches_direct = s == to_series(ctx.nu_ranks(j, depth), depth);
    it.vanishes_below_e = it.first_nonzero == -1 || it.first_nonzero >= a.e;
    it.pass = it.first_nonzero != -1 && it.matches_direct &&
              (!need_vanish_below_e || it.vanishes_below_e);
    if (!it.pass) rep.pass = false;
    rep.items.push_back(it);
  };
  if (a.s % 2 == 1) run_item(t, false);
  for (int j = r + 2; j <= a.s; ++j) run_item(j, true);
  return rep;
}

}  // namespace gkoszul
