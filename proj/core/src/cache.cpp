#include "gkoszul/cache.hpp"

#include "gkoszul/errors.hpp"

namespace gkoszul {

InstanceContext::~InstanceContext() = default;

InstanceContext& InstanceContext::truncated(int j) {
  const Algebra& a = *a_;
  if (j < 2 || j > a.s + 1)
    throw PreconditionViolated("truncated: need 2 <= j <= s+1");
  if (j == a.s + 1) return *this;
  auto it = trunc_.find(j);
  if (it == trunc_.end()) {
    RingPresentation q = a.pres;
    q.truncation = a.pres.truncation ? std::min(*a.pres.truncation, j) : j;
    it = trunc_.emplace(j, std::make_unique<OwnedContext>(build_algebra(q)))
             .first;
  }
  return it->second->ctx;
}

const MinimalResolution& InstanceContext::k_res(int min_depth) {
  if (!rk_ || rk_->depth() < min_depth) {
    rk_ = resolve_module(module_k(*a_), min_depth);
    // Cached tensor ranks stay valid: extra depth never changes low Tor.
  }
  return *rk_;
}

std::vector<int64_t> InstanceContext::module_betti(const FModule& m, int top) {
  if (top < 0) throw PreconditionViolated("module_betti: top must be >= 0");
  auto it = modules_.find(m.label);
  if (it == modules_.end() || (int)it->second.size() <= top) {
    std::vector<int64_t> r;
    if (m.label == "k") {
      const MinimalResolution& rk = k_res(top);
      for (int i = 0; i <= top; ++i) r.push_back(rk.f[i].rank());
    } else {
      r = tensor_homology(k_res(top + 1), m, top);
    }
    it = modules_.insert_or_assign(it == modules_.end() ? modules_.begin() : it,
                                   m.label, std::move(r));
  }
  std::vector<int64_t> out(it->second.begin(), it->second.begin() + top + 1);
  return out;
}

std::vector<int64_t> InstanceContext::map_ranks(const ModuleMap& f,
                                                const std::string& key,
                                                int top) {
  if (top < 0) throw PreconditionViolated("map_ranks: top must be >= 0");
  auto it = maps_.find(key);
  if (it == maps_.end() || (int)it->second.size() <= top) {
    std::vector<int64_t> r = tensor_homology_map(k_res(top + 1), f, top);
    it = maps_.insert_or_assign(it == maps_.end() ? maps_.begin() : it, key,
                                std::move(r));
  }
  std::vector<int64_t> out(it->second.begin(), it->second.begin() + top + 1);
  return out;
}

std::vector<int64_t> InstanceContext::power_betti(int j, int top) {
  return module_betti(j == 0 ? module_R(*a_) : module_power(*a_, j), top);
}

std::vector<int64_t> InstanceContext::quot_betti(int j, int top) {
  return module_betti(module_quot(*a_, j), top);
}

namespace {

ZSeries to_series(const std::vector<int64_t>& r, int order) {
  ZSeries s(order);
  for (int i = 0; i <= order && i < (int)r.size(); ++i) s[i] = r[i];
  return s;
}

}  // namespace

ZSeries InstanceContext::poincare_k(int order) {
  const MinimalResolution& rk = k_res(order);
  std::vector<int64_t> r;
  for (int i = 0; i <= order; ++i) r.push_back(rk.f[i].rank());
  return to_series(r, order);
}

ZSeries InstanceContext::poincare_power(int j, int order) {
  return to_series(power_betti(j, order), order);
}

ZSeries InstanceContext::poincare_quot(int j, int order) {
  return to_series(quot_betti(j, order), order);
}

std::vector<int64_t> InstanceContext::nu_ranks(int j, int top) {
  return map_ranks(nu_inclusion(*a_, j), "nu_" + std::to_string(j), top);
}

std::vector<int64_t> InstanceContext::eta_ranks(int j, int top) {
  return map_ranks(eta_projection(*a_, j), "eta_" + std::to_string(j), top);
}

}  // namespace gkoszul
