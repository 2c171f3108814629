// Command line driver: construct instances, check properties, run the
// theorem audits, and print resolutions/series.  All reports are rendered
// by the library so identical invocations give byte-identical output;
// timing goes to stderr only.
//
// Exit codes: 0 on success (for audits: every decisive check passed),
// 1 when an audit fails decisively, a search finds a candidate, or no
// compressed instance could be constructed, 2 on any input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gkoszul/audit.hpp"
#include "gkoszul/errors.hpp"
#include "gkoszul/report.hpp"
#include "gkoszul/ring.hpp"

using namespace gkoszul;

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

Algebra load_ring(const std::string& path) {
  return build_algebra(presentation_from_json_text(slurp(path)));
}

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw ParseError("bad integer '" + s + "'", 0);
  return v;
}

// "LO:HI" or a single value
std::pair<int, int> parse_range(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) {
    int v = parse_int(s);
    return {v, v};
  }
  int lo = parse_int(s.substr(0, colon));
  int hi = parse_int(s.substr(colon + 1));
  if (lo > hi) throw PreconditionViolated("empty range '" + s + "'");
  return {lo, hi};
}

FModule parse_module(const Algebra& a, const std::string& spec) {
  if (spec == "k") return module_k(a);
  if (spec == "R") return module_R(a);
  if (spec.rfind("m^", 0) == 0)
    return module_power(a, parse_int(spec.substr(2)));
  if (spec.rfind("R/m^", 0) == 0)
    return module_quot(a, parse_int(spec.substr(4)));
  throw ParseError("module must be one of k, R, m^j, R/m^j", 0);
}

struct Common {
  int depth = 6;
  uint32_t field = 101;
  uint32_t seed = 0;
  std::string out;
  std::string format = "json";
};

int run_construct(int e, int s, const std::string& dual_form, uint32_t seed,
                  int retries, uint32_t field, const std::string& out) {
  if (!is_prime(field)) throw PreconditionViolated("--field must be prime");
  if (e < 1) throw PreconditionViolated("--embdim must be >= 1");
  if (s < 2) throw PreconditionViolated("--socle must be >= 2");
  std::optional<Algebra> alg;
  if (!dual_form.empty()) {
    Fp F(field);
    Poly f = parse_poly(dual_form, dual_variables(e), F);
    Algebra a = build_algebra(
        apolar_presentation(f, field, default_variables(e)));
    if (a.s != s)
      throw PreconditionViolated("--dual-form has degree " +
                                 std::to_string(a.s) + ", --socle wants " +
                                 std::to_string(s));
    if (!compressed_report(a).compressed) {
      std::cerr << "the given dual form is not compressed\n";
      return 1;
    }
    alg = std::move(a);
  } else {
    ConstructResult r = construct_compressed(e, s, field, seed, retries);
    if (!r.alg) {
      std::cerr << "no compressed instance found in " << r.attempts
                << " attempts\n";
      return 1;
    }
    std::cerr << "dual form: " << print_poly(r.dual_form, dual_variables(e))
              << "  (attempt " << r.attempts << ")\n";
    alg = std::move(*r.alg);
  }
  emit(presentation_to_json_text(alg->pres), out);
  return 0;
}

int run_check(const std::string& ring, int t_flag, const Common& c,
              std::vector<std::string> props) {
  Algebra a = load_ring(ring);
  InstanceContext ctx(a);
  ReportConfig cfg{c.depth, a.pres.field, c.seed};
  if (props.empty())
    props = {"v",  "hilbert", "socle", "compressed", "thom", "koszul",
             "k1", "k2",      "L",     "G",          "A"};
  const int t = t_flag > 0 ? t_flag : v_of_R(a);
  CheckResults r;
  bool used_t = false;
  for (const std::string& p : props) {
    if (p == "v") {
      r.numbers.push_back({"v", v_of_R(a)});
    } else if (p == "hilbert") {
      r.tables.push_back(
          {"hilbert",
           std::vector<long long>(a.hilbert.begin(), a.hilbert.end())});
    } else if (p == "socle") {
      CompressedReport cr = compressed_report(a);
      r.numbers.push_back({"socle_degree", a.s});
      r.numbers.push_back({"socle_dim", cr.socle_dim});
    } else if (p == "compressed") {
      r.flags.push_back({"compressed", compressed_report(a).compressed});
    } else if (p == "thom") {
      r.judged.push_back({"thom", judge_t_homogeneous(a, t)});
      used_t = true;
    } else if (p == "koszul") {
      r.judged.push_back({"koszul", judge_koszul(ctx, c.depth)});
    } else if (p == "k1") {
      r.judged.push_back({"K1", judge_ext_gen(ctx, 1, c.depth)});
    } else if (p == "k2") {
      r.judged.push_back({"K2", judge_ext_gen(ctx, 2, c.depth)});
    } else if (p == "L") {
      r.judged.push_back({"L", judge_nu_zero(ctx, t, c.depth)});
      used_t = true;
    } else if (p == "G") {
      r.judged.push_back({"G", judge_golod_hom(ctx, t, c.depth)});
      used_t = true;
    } else if (p == "A") {
      r.judged.push_back({"A", judge_small(ctx, t, c.depth)});
      used_t = true;
    } else {
      throw PreconditionViolated("unknown property '" + p + "'");
    }
  }
  if (used_t) r.numbers.push_back({"t", t});
  emit(c.format == "json" ? render_check_json(a, cfg, r)
                          : render_check_text(a, cfg, r),
       c.out);
  return 0;
}

std::vector<QuestionInstance> grid_family(uint32_t base, int trials,
                                          std::pair<int, int> er,
                                          std::pair<int, int> sr,
                                          uint32_t field) {
  if (er.first < 1) throw PreconditionViolated("--embdim-range must be >= 1");
  if (sr.first < 2) throw PreconditionViolated("--socle-range must be >= 2");
  if (trials < 1) throw PreconditionViolated("--trials must be >= 1");
  std::vector<QuestionInstance> fam;
  for (int e = er.first; e <= er.second; ++e)
    for (int s = sr.first; s <= sr.second; ++s)
      for (int i = 0; i < trials; ++i) {
        ConstructResult r = construct_compressed(e, s, field, base + i);
        if (!r.alg) continue;
        fam.push_back({"compressed e=" + std::to_string(e) +
                           " s=" + std::to_string(s) +
                           " seed=" + std::to_string(base + i),
                       std::move(*r.alg)});
      }
  return fam;
}

int run_audit(const std::string& which, const std::string& ring, int t_flag,
              const Common& c, int trials, const std::string& embdim_range,
              const std::string& socle_range) {
  ReportConfig cfg{c.depth, c.field, c.seed};
  if (which == "q1" || which == "q2") {
    std::vector<QuestionInstance> fam =
        (trials > 0 || !embdim_range.empty() || !socle_range.empty())
            ? grid_family(c.seed, trials > 0 ? trials : 10,
                          parse_range(embdim_range.empty() ? "2"
                                                           : embdim_range),
                          parse_range(socle_range.empty() ? "4:6"
                                                          : socle_range),
                          c.field)
            : question_family(c.seed);
    HarnessReport rep = question_harness(
        which == "q1" ? Question::Q1 : Question::Q2, fam, c.depth);
    emit(c.format == "json" ? render_harness_json(cfg, rep)
                            : render_harness_text(cfg, rep),
         c.out);
    return rep.pass ? 0 : 1;
  }
  if (ring.empty())
    throw PreconditionViolated("audit " + which + " needs a ring file");
  Algebra a = load_ring(ring);
  InstanceContext ctx(a);
  cfg.field = a.pres.field;
  AuditReport rep;
  if (which == "k2")
    rep = audit_theorem_k2(ctx, t_flag > 0 ? t_flag : v_of_R(a), c.depth);
  else if (which == "t1")
    rep = audit_t1(ctx, t_flag > 0 ? t_flag : v_of_R(a), c.depth);
  else if (which == "main")
    rep = audit_theorem_main(ctx, c.depth);
  else
    rep = audit_nonvanishing(ctx, c.depth);
  emit(c.format == "json" ? render_audit_json(a, cfg, rep)
                          : render_audit_text(a, cfg, rep),
       c.out);
  return rep.pass ? 0 : 1;
}

int run_table(const std::string& kind, const std::string& ring,
              const std::string& spec, const Common& c) {
  Algebra a = load_ring(ring);
  ReportConfig cfg{c.depth, a.pres.field, c.seed};
  FModule M = parse_module(a, spec);
  MinimalResolution res = resolve_module(M, c.depth);
  std::vector<int64_t> b = res.betti();
  std::vector<long long> values(b.begin(), b.end());
  emit(c.format == "json" ? render_table_json(a, cfg, kind, spec, values)
                          : render_table_text(a, cfg, kind, spec, values),
       c.out);
  return 0;
}

void add_report_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--depth", c.depth, "homological depth bound")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write the report to this file");
  cmd->add_option("--seed", c.seed, "seed recorded in the report")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  CLI::App app{"exact homological invariants of artinian local algebras"};
  app.require_subcommand(1);

  int rc = 0;

  // construct
  int con_e = 0, con_s = 0, con_retries = 16;
  uint32_t con_seed = 0, con_field = 101;
  std::string con_form, con_out;
  CLI::App* con = app.add_subcommand(
      "construct", "construct a compressed instance by apolarity");
  con->add_option("--embdim", con_e, "embedding dimension")->required();
  con->add_option("--socle", con_s, "socle degree")->required();
  con->add_option("--dual-form", con_form,
                  "explicit dual form in the uppercase dual variables");
  con->add_option("--seed", con_seed, "random seed")->capture_default_str();
  con->add_option("--retries", con_retries, "random draws before giving up")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  con->add_option("--field", con_field, "prime field characteristic")
      ->capture_default_str();
  con->add_option("--out", con_out, "write the ring description to this file");
  con->callback([&] {
    rc = run_construct(con_e, con_s, con_form, con_seed, con_retries,
                       con_field, con_out);
  });

  // check
  Common chk;
  std::string chk_ring;
  int chk_t = 0;
  std::vector<std::string> chk_props;
  CLI::App* chk_cmd =
      app.add_subcommand("check", "decide properties of one ring");
  chk_cmd->add_option("ring", chk_ring, "ring description file")->required();
  chk_cmd->add_option("--t", chk_t, "truncation level (default: v(R))")
      ->check(CLI::Range(2, 64));
  chk_cmd
      ->add_option("--props", chk_props,
                   "subset of v, hilbert, socle, compressed, thom, koszul, "
                   "k1, k2, L, G, A")
      ->delimiter(',');
  add_report_flags(chk_cmd, chk);
  chk_cmd->callback([&] { rc = run_check(chk_ring, chk_t, chk, chk_props); });

  // audit
  Common aud;
  std::string aud_which, aud_ring, aud_embdim_range, aud_socle_range;
  int aud_t = 0, aud_trials = 0;
  CLI::App* aud_cmd = app.add_subcommand(
      "audit", "run a theorem audit or a question harness");
  aud_cmd
      ->add_option("which", aud_which,
                   "one of k2, main, not0, t1, q1, q2")
      ->required()
      ->check(CLI::IsMember({"k2", "main", "not0", "t1", "q1", "q2"}));
  aud_cmd->add_option("ring", aud_ring,
                      "ring description file (k2, main, not0, t1)");
  aud_cmd->add_option("--t", aud_t, "truncation level (default: v(R))")
      ->check(CLI::Range(2, 64));
  aud_cmd->add_option("--trials", aud_trials,
                      "instances per (e, s) cell for q1/q2")
      ->check(CLI::Range(1, 1000));
  aud_cmd->add_option("--embdim-range", aud_embdim_range,
                      "LO:HI embedding dimensions for q1/q2");
  aud_cmd->add_option("--socle-range", aud_socle_range,
                      "LO:HI socle degrees for q1/q2");
  aud_cmd->add_option("--field", aud.field, "field for constructed families")
      ->capture_default_str();
  add_report_flags(aud_cmd, aud);
  aud_cmd->callback([&] {
    rc = run_audit(aud_which, aud_ring, aud_t, aud, aud_trials,
                   aud_embdim_range, aud_socle_range);
  });

  // resolve / series
  Common res_c, ser_c;
  std::string res_ring, res_mod = "k", ser_ring, ser_mod = "k";
  CLI::App* res_cmd = app.add_subcommand(
      "resolve", "betti numbers of a module's minimal free resolution");
  res_cmd->add_option("ring", res_ring, "ring description file")->required();
  res_cmd->add_option("--module", res_mod, "k, R, m^j, or R/m^j")
      ->capture_default_str();
  add_report_flags(res_cmd, res_c);
  res_cmd->callback(
      [&] { rc = run_table("betti", res_ring, res_mod, res_c); });

  CLI::App* ser_cmd = app.add_subcommand(
      "series", "Poincare series coefficients of a module");
  ser_cmd->add_option("ring", ser_ring, "ring description file")->required();
  ser_cmd->add_option("--module", ser_mod, "k, R, m^j, or R/m^j")
      ->capture_default_str();
  add_report_flags(ser_cmd, ser_c);
  ser_cmd->callback(
      [&] { rc = run_table("series", ser_ring, ser_mod, ser_c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cerr << "wall-time: " << ms << " ms\n";
  return rc;
}
