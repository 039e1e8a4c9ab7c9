#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace dcut {

struct SolveStats {
  std::map<std::string, std::int64_t> branches_by_phase;
  std::int64_t propagation_calls = 0;
  double wall_time_ms = 0;

  void bump(const std::string& phase, std::int64_t k = 1) { branches_by_phase[phase] += k; }
  void merge(const SolveStats& o) {
    for (const auto& [k, v] : o.branches_by_phase) branches_by_phase[k] += v;
    propagation_calls += o.propagation_calls;
  }
};

}  // namespace dcut
