#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkoszul/algebra.hpp"
#include "gkoszul/filtered_module.hpp"
#include "gkoszul/resolution.hpp"
#include "gkoszul/series.hpp"

namespace gkoszul {

// Memoized homological data for one algebra.  Everything downstream of the
// k-resolution (module Betti numbers, ranks of induced maps, Poincare
// series) funnels through here so the resolution is computed once and
// reused.  The resolution is rebuilt only when a caller needs more depth
// than any earlier caller did.
class InstanceContext {
 public:
  explicit InstanceContext(const Algebra& a) : a_(&a) {}
  ~InstanceContext();
  InstanceContext(const InstanceContext&) = delete;
  InstanceContext& operator=(const InstanceContext&) = delete;

  const Algebra& algebra() const { return *a_; }

  // Context of the truncation R/m^j, memoized together with its algebra.
  // Requires 2 <= j <= s+1; j = s+1 is R itself and returns this context.
  InstanceContext& truncated(int j);

  // Minimal free resolution of k, of depth at least min_depth.
  const MinimalResolution& k_res(int min_depth);

  // Betti numbers of a module for i = 0..top, keyed by the module label.
  std::vector<int64_t> module_betti(const FModule& m, int top);

  // Ranks of Tor_i of a module map for i = 0..top, keyed by `key`.
  std::vector<int64_t> map_ranks(const ModuleMap& f, const std::string& key,
                                 int top);

  // Power-generated convenience wrappers (j = 0 means R itself).
  std::vector<int64_t> power_betti(int j, int top);
  std::vector<int64_t> quot_betti(int j, int top);

  ZSeries poincare_k(int order);
  ZSeries poincare_power(int j, int order);
  ZSeries poincare_quot(int j, int order);

  // Ranks of Tor_i of the inclusion m^j -> m^(j-1), i = 0..top.
  std::vector<int64_t> nu_ranks(int j, int top);
  // Ranks of Tor_i of the projection R/m^j -> R/m^(j-1), i = 0..top.
  std::vector<int64_t> eta_ranks(int j, int top);

 private:
  const Algebra* a_;
  std::optional<MinimalResolution> rk_;
  std::map<std::string, std::vector<int64_t>> modules_;
  std::map<std::string, std::vector<int64_t>> maps_;
  std::map<int, std::unique_ptr<struct OwnedContext>> trunc_;
};

// A truncation's algebra and its context, owned as a unit so the context's
// algebra pointer stays valid for the life of the parent cache.
struct OwnedContext {
  Algebra alg;
  InstanceContext ctx;
  explicit OwnedContext(Algebra a) : alg(std::move(a)), ctx(alg) {}
};

}  // namespace gkoszul
