#include "gkoszul/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "gkoszul/polynomial.hpp"

namespace gkoszul {

using nlohmann::json;

namespace {

json judged_json(const Judged& jd) {
  json o;
  switch (jd.v) {
    case Verdict::True: o["verdict"] = true; break;
    case Verdict::False: o["verdict"] = false; break;
    case Verdict::Unknown: o["verdict"] = "unknown"; break;
  }
  o["depth"] = jd.depth;
  o["decisive"] = jd.decisive;
  if (!jd.witness.empty()) o["witness"] = jd.witness;
  return o;
}

json verdict_json(Verdict v) {
  if (v == Verdict::True) return json(true);
  if (v == Verdict::False) return json(false);
  return json("unknown");
}

json instance_json(const Algebra& a) {
  json o;
  o["field"] = a.pres.field;
  o["variables"] = a.pres.variables;
  std::vector<std::string> gens;
  for (const auto& g : a.pres.generators)
    gens.push_back(print_poly(g, a.pres.variables));
  o["generators"] = gens;
  if (a.pres.truncation) o["truncation"] = *a.pres.truncation;
  o["embdim"] = a.e;
  o["socle_degree"] = a.s;
  o["length"] = a.lambda;
  o["graded"] = a.graded;
  o["hilbert"] = a.hilbert;
  return o;
}

json config_json(const ReportConfig& cfg) {
  json o;
  o["depth"] = cfg.depth;
  o["field"] = cfg.field;
  o["seed"] = cfg.seed;
  return o;
}

std::string envelope(json instance, json config, json results,
                     json witnesses) {
  json doc;
  doc["schema"] = 1;
  doc["instance"] = std::move(instance);
  doc["config"] = std::move(config);
  doc["results"] = std::move(results);
  doc["witnesses"] = std::move(witnesses);
  return doc.dump(2) + "\n";
}

const char* verdict_text(const Judged& jd) {
  if (jd.v == Verdict::Unknown) return "unknown";
  return jd.v == Verdict::True ? "true" : "false";
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os.str();
}

std::string instance_line(const Algebra& a) {
  std::ostringstream os;
  os << "instance: embdim " << a.e << ", socle degree " << a.s << ", length "
     << a.lambda << ", field " << a.pres.field
     << (a.graded ? ", graded" : ", local");
  return os.str();
}

}  // namespace

std::string render_check_json(const Algebra& a, const ReportConfig& cfg,
                              const CheckResults& r) {
  json results = json::object();
  json witnesses = json::object();
  for (const auto& [name, jd] : r.judged) {
    results[name] = judged_json(jd);
    if (!jd.witness.empty()) witnesses[name] = jd.witness;
  }
  for (const auto& [name, n] : r.numbers) results[name] = n;
  for (const auto& [name, b] : r.flags) results[name] = b;
  for (const auto& [name, t] : r.tables) results[name] = t;
  return envelope(instance_json(a), config_json(cfg), std::move(results),
                  std::move(witnesses));
}

std::string render_check_text(const Algebra& a, const ReportConfig& cfg,
                              const CheckResults& r) {
  std::ostringstream os;
  os << instance_line(a) << "\n";
  os << "depth bound: " << cfg.depth << "\n";
  for (const auto& [name, n] : r.numbers) os << name << ": " << n << "\n";
  for (const auto& [name, b] : r.flags)
    os << name << ": " << (b ? "true" : "false") << "\n";
  for (const auto& [name, t] : r.tables)
    os << name << ": " << join(t) << "\n";
  for (const auto& [name, jd] : r.judged) {
    os << name << ": " << verdict_text(jd);
    os << (jd.decisive ? "  (decisive" : "  (within depth");
    if (!jd.witness.empty()) os << ", " << jd.witness;
    os << ")\n";
  }
  return os.str();
}

std::string render_audit_json(const Algebra& a, const ReportConfig& cfg,
                              const AuditReport& rep) {
  json results;
  results["which"] = rep.which;
  results["pass"] = rep.pass;
  json checks = json::array();
  json witnesses = json::array();
  for (const auto& c : rep.checks) {
    json o;
    o["name"] = c.name;
    o["verdict"] = verdict_json(c.v);
    o["decisive"] = c.decisive;
    if (!c.witness.empty()) {
      o["witness"] = c.witness;
      json w;
      w["check"] = c.name;
      w["value"] = c.witness;
      witnesses.push_back(std::move(w));
    }
    checks.push_back(std::move(o));
  }
  results["checks"] = std::move(checks);
  return envelope(instance_json(a), config_json(cfg), std::move(results),
                  std::move(witnesses));
}

std::string render_audit_text(const Algebra& a, const ReportConfig& cfg,
                              const AuditReport& rep) {
  std::ostringstream os;
  os << instance_line(a) << "\n";
  os << "audit " << rep.which << ": " << (rep.pass ? "pass" : "FAIL")
     << "  (depth " << cfg.depth << ")\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.name << ": ";
    if (c.v == Verdict::Unknown)
      os << "unknown";
    else
      os << (c.v == Verdict::True ? "true" : "false");
    os << (c.decisive ? "  (decisive" : "  (within depth");
    if (!c.witness.empty()) os << ", " << c.witness;
    os << ")\n";
  }
  return os.str();
}

std::string render_harness_json(const ReportConfig& cfg,
                                const HarnessReport& rep) {
  json instance;
  instance["kind"] = "family";
  instance["size"] = static_cast<long long>(rep.items.size());
  instance["base_seed"] = cfg.seed;

  json results;
  results["question"] = rep.q == Question::Q1 ? "q1" : "q2";
  results["pass"] = rep.pass;
  results["candidates"] = rep.candidates;
  json items = json::array();
  for (const auto& it : rep.items) {
    json o;
    o["label"] = it.label;
    o["gated"] = it.gated;
    if (!it.gate_reason.empty()) o["gate_reason"] = it.gate_reason;
    if (!it.failed_j.empty()) o["failed_j"] = it.failed_j;
    o["candidate"] = it.candidate;
    items.push_back(std::move(o));
  }
  results["items"] = std::move(items);

  json witnesses;
  witnesses["candidates"] = rep.candidates;
  return envelope(std::move(instance), config_json(cfg), std::move(results),
                  std::move(witnesses));
}

std::string render_harness_text(const ReportConfig& cfg,
                                const HarnessReport& rep) {
  std::ostringstream os;
  os << "audit " << (rep.q == Question::Q1 ? "q1" : "q2") << ": "
     << (rep.pass ? "pass" : "CANDIDATES FOUND") << "  (" << rep.items.size()
     << " instances, depth " << cfg.depth << ", base seed " << cfg.seed
     << ")\n";
  for (const auto& it : rep.items) {
    os << "  " << it.label << ": ";
    if (!it.gated) {
      os << "excluded (" << it.gate_reason << ")";
    } else if (it.candidate) {
      os << "CANDIDATE";
      if (!it.failed_j.empty()) {
        os << " at j =";
        for (int j : it.failed_j) os << " " << j;
      }
    } else {
      os << "consistent";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_table_json(const Algebra& a, const ReportConfig& cfg,
                              const std::string& kind,
                              const std::string& module,
                              const std::vector<long long>& values) {
  json results;
  results["module"] = module;
  results[kind] = values;
  return envelope(instance_json(a), config_json(cfg), std::move(results),
                  json::object());
}

std::string render_table_text(const Algebra& a, const ReportConfig& cfg,
                              const std::string& kind,
                              const std::string& module,
                              const std::vector<long long>& values) {
  std::ostringstream os;
  os << instance_line(a) << "\n";
  os << kind << " of " << module << " to depth " << cfg.depth << ": "
     << join(values) << "\n";
  return os.str();
}

}  // namespace gkoszul
