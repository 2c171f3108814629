#pragma once
// Theorem-level orchestration: the property taxonomy of the ring, the
// equivalence and implication audits, vanishing/nonvanishing predictions,
// and the search harness for the two open questions.
//
// Verdict logic is three-valued.  Universally quantified homological
// statements are only semi-decidable here, so a check that holds at every
// index up to the bound reports True with decisive=false ("held within
// depth"), while a concrete witness of failure is a decisive False.
// Existence claims invert: a witness found is a decisive True, and none
// found within the bound is Unknown -- never a refutation.  Finitely
// checkable properties (t-homogeneity) are decisive both ways.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkoszul/cache.hpp"

namespace gkoszul {

enum class Verdict { True, False, Unknown };
const char* verdict_name(Verdict v);

struct Judged {
  Verdict v = Verdict::Unknown;
  int depth = 0;
  bool decisive = false;
  std::string witness;  // first failing index / coefficient, "" if none
};

// Individual property judges (shared by the audits and the CLI).
Judged judge_small(InstanceContext& ctx, int j, int depth);
Judged judge_golod_hom(InstanceContext& ctx, int j, int depth);
Judged judge_nu_zero(InstanceContext& ctx, int j, int depth);
Judged judge_nu_nonzero(InstanceContext& ctx, int j, int depth);
Judged judge_ext_gen(InstanceContext& ctx, int maxdeg, int depth);
Judged judge_koszul(InstanceContext& ctx, int depth);
Judged judge_t_homogeneous(const Algebra& a, int t);

// The taxonomy at a given t: plain and primed (all j >= t) variants of the
// vanishing / Golod / small properties, Ext generation, Koszulness of the
// associated graded ring, and t-homogeneity, plus the per-truncation detail
// they are assembled from.  `violations` lists any implication of the known
// diagram that the computed verdicts breach on a True/False pair; Unknown
// never triggers one.
struct PropertyVector {
  int t = 0;
  int depth = 0;
  int vr = 0;  // v(R)
  int e = 0;
  int s = 0;
  int lambda = 0;
  Judged k, k1, k2, h_t;
  Judged l_t, g_t, a_t;
  Judged l_prime, g_prime, a_prime;
  Judged g_mid;  // Golod for t <= j <= min(2t-2, s+1)
  std::map<int, Judged> l_j, g_j, a_j;  // j = t .. s+1
  std::vector<std::string> violations;
};
PropertyVector classify(InstanceContext& ctx, int t, int depth);

struct AuditCheck {
  std::string name;
  Verdict v = Verdict::Unknown;
  bool decisive = false;
  std::string witness;
};
struct AuditReport {
  std::string which;
  bool pass = true;  // no decisive failure among the checks
  std::vector<AuditCheck> checks;
};

// The six-way equivalence at t (2 <= t <= v(R), PreconditionViolated
// otherwise): small rho_t; small rho_j for all j >= t; Golod rho_t; Golod
// rho_j for t <= j <= 2t-2; vanishing of Tor(nu_t); t-homogeneous with Ext
// generated in degrees 1,2.  Fails iff two conditions land on opposite
// True/False verdicts; Unknown never fails.
AuditReport audit_theorem_k2(InstanceContext& ctx, int t, int depth);

// The compressed Gorenstein theorem (socle degree 2 <= s != 3, else
// PreconditionViolated).  Even s: Tor(nu_t) = 0, rho_j Golod and small for
// all j >= t, Ext generated in degrees 1,2.  Odd s: the same three
// homological claims starting at t+1.  Both parities: Tor(nu_j) != 0
// detected within the bound for s+2-t < j <= s (Unknown when undetected).
AuditReport audit_theorem_main(InstanceContext& ctx, int depth);

// The A-series closed forms and the vanishing/nonvanishing predictions,
// cross-checked against directly computed Tor ranks of the inclusions.
AuditReport audit_nonvanishing(InstanceContext& ctx, int depth);

// classify() plus one check per implication of the property diagram.
AuditReport audit_t1(InstanceContext& ctx, int t, int depth);

enum class Question { Q1, Q2 };

struct QuestionInstance {
  std::string label;
  Algebra alg;
};

// The default desk-scale search family: ten compressed (e=2, s=4) and ten
// compressed (e=2, s=6) instances seeded base..base+9, plus the complete
// intersections (x^a, y^b) for 2 <= a <= b <= 4.
std::vector<QuestionInstance> question_family(uint32_t base_seed);

struct HarnessItem {
  std::string label;
  bool gated = false;          // passed the hypothesis gate
  std::string gate_reason;     // why it was excluded, "" when gated
  std::vector<int> failed_j;   // Q1: truncations with non-Golod rho_j
  bool candidate = false;
};
struct HarnessReport {
  Question q = Question::Q1;
  int depth = 0;
  bool pass = true;  // no candidate counterexamples
  std::vector<HarnessItem> items;
  std::vector<std::string> candidates;
};

// Q1: among instances that are t-homogeneous with rho_t Golod (t = v(R)),
// look for a deeper truncation whose projection is decisively not Golod.
// Q2: report instances that are t-homogeneous and K2 with t > 2 and all
// Tor(nu_j) zero within the bound.  Either kind of hit is a candidate for
// deeper investigation, never a settled answer.
HarnessReport question_harness(Question q,
                               const std::vector<QuestionInstance>& fam,
                               int depth);

}  // namespace gkoszul
