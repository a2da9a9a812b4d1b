#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nucleal::core {

struct Witness {
  std::string law;
  std::string detail;
};

/// Per-law breakdown inside a report.
struct LawStats {
  std::string law;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  int exhaustive_size = -1;  // largest size enumerated completely, -1 if none
  std::size_t sampled = 0;
  bool fully_exhaustive = false;
  bool reduced = false;
};

/// Outcome of a property-check run.
struct AxiomReport {
  std::string law;
  std::string instance;
  std::size_t cases = 0;
  std::size_t failed_cases = 0;
  std::vector<Witness> failures;
  double elapsed = 0.0;
  bool exhaustive = true;
  bool reduced = false;
  std::vector<LawStats> parts;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return failed_cases == 0; }

  void add_failure(std::string law_name, std::string detail, std::size_t cap) {
    ++failed_cases;
    if (failures.size() < cap) failures.push_back({std::move(law_name), std::move(detail)});
  }

  void absorb(const AxiomReport& other) {
    cases += other.cases;
    failed_cases += other.failed_cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    elapsed += other.elapsed;
    exhaustive = exhaustive && other.exhaustive;
    reduced = reduced || other.reduced;
    parts.insert(parts.end(), other.parts.begin(), other.parts.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  /// One-line coverage summary, e.g. "exhaustive<=3" or "exhaustive<=1 +200 sampled@3".
  [[nodiscard]] std::string coverage() const;
  [[nodiscard]] std::string summary() const;
};

}  // namespace nucleal::core
