#include "gkoszul/audit.hpp"

#include <algorithm>

#include "gkoszul/chain_map.hpp"
#include "gkoszul/errors.hpp"
#include "gkoszul/hom_checks.hpp"
#include "gkoszul/series_checks.hpp"
#include "gkoszul/yoneda.hpp"

namespace gkoszul {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    default:
      return "unknown";
  }
}

namespace {

Judged held(int depth) { return {Verdict::True, depth, false, ""}; }

Judged refuted(int depth, std::string w) {
  return {Verdict::False, depth, true, std::move(w)};
}

// Conjunction of per-truncation verdicts over lo <= j <= hi.
Judged conjoin(const std::map<int, Judged>& parts, int lo, int hi, int depth) {
  Judged out{Verdict::True, depth, true, ""};
  for (int j = lo; j <= hi; ++j) {
    auto it = parts.find(j);
    if (it == parts.end()) continue;
    const Judged& p = it->second;
    if (p.v == Verdict::False) {
      std::string w = "j=" + std::to_string(j);
      if (!p.witness.empty()) w += " " + p.witness;
      return refuted(depth, std::move(w));
    }
    if (p.v == Verdict::Unknown) out.v = Verdict::Unknown;
    if (!p.decisive) out.decisive = false;
  }
  return out;
}

Judged conj2(const Judged& p, const Judged& q, int depth) {
  if (p.v == Verdict::False) return refuted(depth, p.witness);
  if (q.v == Verdict::False) return refuted(depth, q.witness);
  Judged out{Verdict::True, depth, p.decisive && q.decisive, ""};
  if (p.v == Verdict::Unknown || q.v == Verdict::Unknown) {
    out.v = Verdict::Unknown;
    out.decisive = false;
  }
  return out;
}

AuditCheck from_judged(std::string name, const Judged& j) {
  return {std::move(name), j.v, j.decisive, j.witness};
}

// One check per implication of the property diagram; an implication is
// violated only by a True antecedent against a False consequent.
std::vector<AuditCheck> diagram_checks(const PropertyVector& pv) {
  std::vector<AuditCheck> out;
  auto imp = [&](const std::string& name, const Judged& p, const Judged& q) {
    AuditCheck c{name, Verdict::True, false, ""};
    if (p.v == Verdict::True && q.v == Verdict::False) {
      c.v = Verdict::False;
      c.decisive = true;
      c.witness = q.witness;
    }
    out.push_back(std::move(c));
  };
  auto equ = [&](const std::string& name, const Judged& p, const Judged& q,
                 bool applicable) {
    AuditCheck c{name, Verdict::True, false, ""};
    if (!applicable) {
      c.v = Verdict::Unknown;
      c.witness = "t > v(R)";
    } else if ((p.v == Verdict::True && q.v == Verdict::False) ||
               (p.v == Verdict::False && q.v == Verdict::True)) {
      c.v = Verdict::False;
      c.decisive = true;
      c.witness = p.witness.empty() ? q.witness : p.witness;
    }
    out.push_back(std::move(c));
  };
  imp("L'_t => L_t", pv.l_prime, pv.l_t);
  imp("L'_t => G'_t", pv.l_prime, pv.g_prime);
  imp("G'_t => A'_t", pv.g_prime, pv.a_prime);
  imp("K => K2", pv.k, pv.k2);
  equ("A'_t <=> A_t", pv.a_prime, pv.a_t, true);
  const bool in_range = pv.t <= pv.vr;
  equ("G_t <=> A_t", pv.g_t, pv.a_t, in_range);
  equ("A_t <=> L_t", pv.a_t, pv.l_t, in_range);
  return out;
}

void require_rs_audit(const Algebra& a, const std::string& who) {
  CompressedReport rep = compressed_report(a);
  if (!rep.compressed || rep.socle_dim != 1 || a.s < 2 || a.s == 3)
    throw PreconditionViolated(
        who + ": needs a compressed Gorenstein algebra with socle degree >= 2 "
              "and != 3");
}

}  // namespace

Judged judge_small(InstanceContext& ctx, int j, int depth) {
  SmallCheck sc = small_check(ctx, j, depth);
  if (sc.small) return held(depth);
  return refuted(depth, "i=" + std::to_string(sc.failed.front()));
}

Judged judge_golod_hom(InstanceContext& ctx, int j, int depth) {
  SeriesCheck g = golod_hom_check(ctx, j, depth);
  if (g.pass) return held(depth);
  return refuted(depth,
                 "z^" + std::to_string(g.residual.first_nonzero()));
}

Judged judge_nu_zero(InstanceContext& ctx, int j, int depth) {
  std::vector<int64_t> r = ctx.nu_ranks(j, depth);
  for (int i = 0; i <= depth; ++i)
    if (r[i] != 0) return refuted(depth, "i=" + std::to_string(i));
  return held(depth);
}

Judged judge_nu_nonzero(InstanceContext& ctx, int j, int depth) {
  std::vector<int64_t> r = ctx.nu_ranks(j, depth);
  for (int i = 0; i <= depth; ++i)
    if (r[i] != 0)
      return {Verdict::True, depth, true, "i=" + std::to_string(i)};
  return {Verdict::Unknown, depth, false, ""};
}

Judged judge_ext_gen(InstanceContext& ctx, int maxdeg, int depth) {
  ExtGeneration eg = ext_generated_by(ctx, maxdeg, depth);
  if (eg.generated) return held(depth);
  return refuted(depth, "degree " + std::to_string(eg.first_gap));
}

Judged judge_koszul(InstanceContext& ctx, int depth) {
  const Algebra& a = ctx.algebra();
  bool linear;
  if (a.graded) {
    linear = koszul_linearity(ctx, depth);
  } else {
    GradedParts gp = assoc_graded(a);
    InstanceContext gc(gp.gr);
    linear = koszul_linearity(gc, depth);
  }
  return linear ? held(depth) : refuted(depth, "");
}

Judged judge_t_homogeneous(const Algebra& a, int t) {
  if (t < 2)
    throw PreconditionViolated("judge_t_homogeneous: need t >= 2");
  bool h = is_t_homogeneous(a, t);
  return {h ? Verdict::True : Verdict::False, 0, true, ""};
}

PropertyVector classify(InstanceContext& ctx, int t, int depth) {
  const Algebra& a = ctx.algebra();
  if (t < 2) throw PreconditionViolated("classify: need t >= 2");
  if (depth < 0) throw PreconditionViolated("classify: depth must be >= 0");
  PropertyVector pv;
  pv.t = t;
  pv.depth = depth;
  pv.vr = v_of_R(a);
  pv.e = a.e;
  pv.s = a.s;
  pv.lambda = a.lambda;
  pv.k = judge_koszul(ctx, depth);
  pv.k1 = judge_ext_gen(ctx, 1, depth);
  pv.k2 = judge_ext_gen(ctx, 2, depth);
  pv.h_t = judge_t_homogeneous(a, t);
  for (int j = t; j <= a.s + 1; ++j) {
    pv.g_j[j] = judge_golod_hom(ctx, j, depth);
    pv.a_j[j] = judge_small(ctx, j, depth);
    pv.l_j[j] = judge_nu_zero(ctx, j, depth);
  }
  pv.l_t = pv.l_j.at(t);
  pv.g_t = pv.g_j.at(t);
  pv.a_t = pv.a_j.at(t);
  pv.l_prime = conjoin(pv.l_j, t, a.s + 1, depth);
  pv.g_prime = conjoin(pv.g_j, t, a.s + 1, depth);
  pv.a_prime = conjoin(pv.a_j, t, a.s + 1, depth);
  pv.g_mid = conjoin(pv.g_j, t, std::min(2 * t - 2, a.s + 1), depth);
  for (const AuditCheck& c : diagram_checks(pv))
    if (c.v == Verdict::False) pv.violations.push_back(c.name);
  return pv;
}

AuditReport audit_theorem_k2(InstanceContext& ctx, int t, int depth) {
  const Algebra& a = ctx.algebra();
  if (t < 2 || t > v_of_R(a))
    throw PreconditionViolated("audit_theorem_k2: need 2 <= t <= v(R)");
  if (depth < 0)
    throw PreconditionViolated("audit_theorem_k2: depth must be >= 0");
  std::map<int, Judged> small_j, golod_j;
  for (int j = t; j <= a.s + 1; ++j) {
    golod_j[j] = judge_golod_hom(ctx, j, depth);
    small_j[j] = judge_small(ctx, j, depth);
  }
  Judged c[6];
  c[0] = small_j.at(t);
  c[1] = conjoin(small_j, t, a.s + 1, depth);
  c[2] = golod_j.at(t);
  c[3] = conjoin(golod_j, t, std::min(2 * t - 2, a.s + 1), depth);
  c[4] = judge_nu_zero(ctx, t, depth);
  c[5] = conj2(judge_t_homogeneous(a, t), judge_ext_gen(ctx, 2, depth),
               depth);
  const char* names[6] = {
      "(1) small rho_t",
      "(2) small rho_j for all j >= t",
      "(3) golod rho_t",
      "(4) golod rho_j for t <= j <= 2t-2",
      "(5) Tor(nu_t) = 0",
      "(6) t-homogeneous and Ext generated in degrees 1,2",
  };
  AuditReport rep;
  rep.which = "k2";
  for (int i = 0; i < 6; ++i) rep.checks.push_back(from_judged(names[i], c[i]));
  AuditCheck cons{"equivalence consistency", Verdict::True, false, ""};
  for (int i = 0; i < 6 && cons.v == Verdict::True; ++i)
    for (int l = i + 1; l < 6; ++l)
      if ((c[i].v == Verdict::True && c[l].v == Verdict::False) ||
          (c[i].v == Verdict::False && c[l].v == Verdict::True)) {
        cons.v = Verdict::False;
        cons.decisive = true;
        cons.witness = "(" + std::to_string(i + 1) + ") vs (" +
                       std::to_string(l + 1) + ")";
        rep.pass = false;
        break;
      }
  rep.checks.push_back(std::move(cons));
  return rep;
}

AuditReport audit_theorem_main(InstanceContext& ctx, int depth) {
  const Algebra& a = ctx.algebra();
  require_rs_audit(a, "audit_theorem_main");
  if (depth < 0)
    throw PreconditionViolated("audit_theorem_main: depth must be >= 0");
  const int t = t_of_socle(a.s);
  const int r = r_of_socle(a.s);
  const bool even = a.s % 2 == 0;
  const int j0 = even ? t : t + 1;
  AuditReport rep;
  rep.which = "main";
  auto add = [&](std::string name, const Judged& jd) {
    rep.checks.push_back(from_judged(std::move(name), jd));
    if (jd.v == Verdict::False) rep.pass = false;
  };
  add(even ? "(1) Tor(nu_t) = 0" : "(1') Tor(nu_t+1) = 0",
      judge_nu_zero(ctx, j0, depth));
  const char* g_tag = even ? "(2) golod rho_" : "(2') golod rho_";
  const char* a_tag = even ? "(3) small rho_" : "(3') small rho_";
  for (int j = j0; j <= a.s + 1; ++j)
    add(g_tag + std::to_string(j), judge_golod_hom(ctx, j, depth));
  for (int j = j0; j <= a.s + 1; ++j)
    add(a_tag + std::to_string(j), judge_small(ctx, j, depth));
  if (even)
    add("(4) Ext generated in degrees 1,2", judge_ext_gen(ctx, 2, depth));
  for (int j = r + 2; j <= a.s; ++j)
    add("Tor(nu_" + std::to_string(j) + ") != 0 within depth",
        judge_nu_nonzero(ctx, j, depth));
  return rep;
}

AuditReport audit_nonvanishing(InstanceContext& ctx, int depth) {
  const Algebra& a = ctx.algebra();
  AuditReport rep;
  rep.which = "not0";
  auto add = [&](std::string name, const Judged& jd) {
    rep.checks.push_back(from_judged(std::move(name), jd));
    if (jd.v == Verdict::False) rep.pass = false;
  };
  ASeriesIdentities ids = a_series_identities(ctx, depth);
  if (ids.odd_checked)
    add("a-series closed form at the midpoint",
        ids.odd.pass
            ? Judged{Verdict::True, depth, false, ""}
            : refuted(depth, "z^" + std::to_string(
                                        ids.odd.residual.first_nonzero())));
  const int r = r_of_socle(a.s);
  for (int j = r + 2; j <= a.s; ++j) {
    bool ok = std::find(ids.zz_failed.begin(), ids.zz_failed.end(), j) ==
              ids.zz_failed.end();
    add("a-series closed form, j=" + std::to_string(j),
        ok ? Judged{Verdict::True, depth, false, ""} : refuted(depth, ""));
  }
  NonvanishingReport nv = nonvanishing_predictions(ctx, depth);
  for (const NonvanishingItem& it : nv.items) {
    const std::string nu = "nu_" + std::to_string(it.j);
    add("a-series of " + nu + " matches direct Tor ranks",
        it.matches_direct ? Judged{Verdict::True, depth, true, ""}
                          : refuted(depth, ""));
    if (it.j >= r + 2)
      add("Tor(" + nu + ") = 0 below degree e",
          it.vanishes_below_e
              ? Judged{Verdict::True, depth, true, ""}
              : refuted(depth, "i=" + std::to_string(it.first_nonzero)));
    add("Tor(" + nu + ") != 0 within depth",
        it.first_nonzero >= 0
            ? Judged{Verdict::True, depth, true,
                     "i=" + std::to_string(it.first_nonzero)}
            : Judged{Verdict::Unknown, depth, false, ""});
  }
  return rep;
}

AuditReport audit_t1(InstanceContext& ctx, int t, int depth) {
  PropertyVector pv = classify(ctx, t, depth);
  AuditReport rep;
  rep.which = "t1";
  for (AuditCheck& c : diagram_checks(pv)) {
    if (c.v == Verdict::False) rep.pass = false;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::vector<QuestionInstance> question_family(uint32_t base_seed) {
  std::vector<QuestionInstance> fam;
  auto add_compressed = [&](int e, int s) {
    for (uint32_t i = 0; i < 10; ++i) {
      ConstructResult r = construct_compressed(e, s, 101, base_seed + i);
      if (!r.alg) continue;
      fam.push_back({"compressed e=" + std::to_string(e) +
                         " s=" + std::to_string(s) +
                         " seed=" + std::to_string(base_seed + i),
                     std::move(*r.alg)});
    }
  };
  add_compressed(2, 4);
  add_compressed(2, 6);
  for (int p = 2; p <= 4; ++p)
    for (int q = p; q <= 4; ++q) {
      std::string xa = "x^" + std::to_string(p);
      std::string yb = "y^" + std::to_string(q);
      fam.push_back({"ci " + xa + " " + yb,
                     build_algebra(make_presentation(101, {"x", "y"},
                                                     {xa, yb}))});
    }
  return fam;
}

HarnessReport question_harness(Question q,
                               const std::vector<QuestionInstance>& fam,
                               int depth) {
  if (depth < 0)
    throw PreconditionViolated("question_harness: depth must be >= 0");
  HarnessReport rep;
  rep.q = q;
  rep.depth = depth;
  for (const QuestionInstance& qi : fam) {
    const Algebra& a = qi.alg;
    InstanceContext ctx(a);
    HarnessItem item;
    item.label = qi.label;
    const int t = v_of_R(a);
    if (q == Question::Q1) {
      if (t < 2 || !is_t_homogeneous(a, t)) {
        item.gate_reason = "not t-homogeneous";
      } else if (!golod_hom_check(ctx, t, depth).pass) {
        item.gate_reason = "rho_t not golod within depth";
      } else {
        item.gated = true;
        for (int j = t + 1; j <= a.s + 1; ++j)
          if (!golod_hom_check(ctx, j, depth).pass)
            item.failed_j.push_back(j);
        item.candidate = !item.failed_j.empty();
      }
    } else {
      if (t <= 2) {
        item.gate_reason = "t = 2";
      } else if (!is_t_homogeneous(a, t)) {
        item.gate_reason = "not t-homogeneous";
      } else if (!ext_generated_by(ctx, 2, depth).generated) {
        item.gate_reason = "Ext not generated in degrees 1,2 within depth";
      } else {
        int bad = -1;
        for (int j = t; j <= a.s + 1 && bad < 0; ++j) {
          std::vector<int64_t> rk = ctx.nu_ranks(j, depth);
          for (int i = 0; i <= depth; ++i)
            if (rk[i] != 0) {
              bad = j;
              break;
            }
        }
        if (bad >= 0) {
          item.gate_reason = "Tor(nu_" + std::to_string(bad) + ") nonzero";
        } else {
          item.gated = true;
          item.candidate = true;  // survives every screen: needs deeper depth
        }
      }
    }
    if (item.candidate) {
      rep.pass = false;
      rep.candidates.push_back(item.label);
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace gkoszul
