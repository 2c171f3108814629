#pragma once
// Deterministic report rendering for the command line driver and for any
// embedding that wants machine-readable verdicts.  Every JSON document has
// the same envelope -- schema, instance, config, results, witnesses -- with
// lexicographically sorted keys, and identical inputs render byte-identical
// bytes.  Timing is never part of a document; callers that want it print it
// to stderr themselves.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gkoszul/audit.hpp"

namespace gkoszul {

struct ReportConfig {
  int depth = 6;
  uint32_t field = 101;
  uint32_t seed = 0;
};

// Results of a property check run: judged verdicts plus plain data facts,
// each keyed by its output name.  Kept as ordered pairs so the text
// rendering follows the order the caller chose; the JSON rendering sorts.
struct CheckResults {
  std::vector<std::pair<std::string, Judged>> judged;
  std::vector<std::pair<std::string, long long>> numbers;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, std::vector<long long>>> tables;
};

std::string render_check_json(const Algebra& a, const ReportConfig& cfg,
                              const CheckResults& r);
std::string render_check_text(const Algebra& a, const ReportConfig& cfg,
                              const CheckResults& r);

std::string render_audit_json(const Algebra& a, const ReportConfig& cfg,
                              const AuditReport& rep);
std::string render_audit_text(const Algebra& a, const ReportConfig& cfg,
                              const AuditReport& rep);

std::string render_harness_json(const ReportConfig& cfg,
                                const HarnessReport& rep);
std::string render_harness_text(const ReportConfig& cfg,
                                const HarnessReport& rep);

// Betti / series table for one module ("kind" is "betti" or "series").
std::string render_table_json(const Algebra& a, const ReportConfig& cfg,
                              const std::string& kind,
                              const std::string& module,
                              const std::vector<long long>& values);
std::string render_table_text(const Algebra& a, const ReportConfig& cfg,
                              const std::string& kind,
                              const std::string& module,
                              const std::vector<long long>& values);

}  // namespace gkoszul
