#include "nucleal/core/report.hpp"

#include <algorithm>
#include <cstdio>

namespace nucleal::core {

std::string AxiomReport::coverage() const {
  if (parts.empty()) return cases == 0 ? "no cases" : "sampled";
  int min_full = 1 << 20;
  bool any_sampled = false;
  std::size_t sampled = 0, fixed = 0;
  for (const auto& p : parts) {
    if (p.fully_exhaustive) {
      min_full = std::min(min_full, p.exhaustive_size);
    } else if (p.sampled == 0 && p.exhaustive_size < 0) {
      fixed += p.cases;
    } else {
      any_sampled = true;
      sampled += p.sampled;
      min_full = std::min(min_full, p.exhaustive_size);
    }
  }
  std::string out;
  if (min_full >= 0 && min_full < (1 << 20)) out = "exhaustive<=" + std::to_string(min_full);
  if (any_sampled) {
    if (!out.empty()) out += " ";
    out += "+" + std::to_string(sampled) + " sampled";
  }
  if (fixed > 0) {
    if (!out.empty()) out += " ";
    out += "+" + std::to_string(fixed) + " fixed";
  }
  if (out.empty()) out = "sampled";
  return out;
}

std::string AxiomReport::summary() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s [%s]: %zu cases, %zu failed, %.2fs, %s%s", law.c_str(), instance.c_str(), cases,
                failed_cases, elapsed, coverage().c_str(), reduced ? ", reduced" : "");
  return buf;
}

}  // namespace nucleal::core
