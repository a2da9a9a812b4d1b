#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nucleal/core/cases.hpp"
#include "nucleal/core/report.hpp"
#include "nucleal/io.hpp"

/// Named verification suites over every registered instance.
namespace nucleal::suites {

/// A known gap between a stated law and the instances, reproduced on
/// purpose. A finding that stops reproducing fails its suite.
struct Finding {
  std::string name;
  std::string detail;
  bool reproduced = false;
  std::vector<core::AxiomReport> evidence;
};

struct SuiteResult {
  std::string suite;
  std::vector<core::AxiomReport> reports;
  std::vector<Finding> findings;
  double elapsed = 0.0;

  [[nodiscard]] bool passed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Command-line overrides for the numeric instances.
struct Overrides {
  std::optional<double> tol;
  std::optional<int> n;  // grid nodes of the drelnum fixture
};

/// Throws ParseError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const core::RunConfig& cfg, const Overrides& ov = {});

io::Json to_json(const SuiteResult& r);
io::Json to_json(const std::vector<SuiteResult>& rs);
std::string to_text(const SuiteResult& r);

// Building blocks, also used by the acceptance binary.

/// theta over Z/4 misses relations between points of degrees 1 and 3.
Finding xrel_z4_finding();
/// Over Z/2, theta is a bijection on carriers up to `max_carrier`.
core::AxiomReport xrel_z2_bijectivity(int max_carrier);
/// a = (1, 0) : * -> {p, q} then b = (0, 1) : {p, q} -> * has total mass 0.
Finding finstoch_mass_loss_finding();
/// Parametrized-trace failures in pinj that are all membership mismatches
/// on the iterated-vanishing and sliding laws.
Finding pinj_membership_finding(const core::AxiomReport& param_trace);
/// Sliding in the pinj trace ideal: gf in the trace class without fg in
/// it, exhaustively over sets up to `max_size`.
Finding pinj_sliding_membership_finding(int max_size);

/// Giry unit and associativity laws exhaustively over supports up to `n`.
core::AxiomReport giry_laws(int n);
/// Disintegration, worked examples and isomorphism witnesses on `cases` samples.
core::AxiomReport prel_report(const core::RunConfig& cfg, int cases);

/// Identity is nuclear iff distributive, over lattices up to `bound` elements.
core::AxiomReport cjsl_characterization(int bound);

/// Pairing, associativity, trace cyclicity, refinement and identity defect
/// on a Gaussian-bump family.
core::AxiomReport drel_numeric(const io::DrelFamily& family);

}  // namespace nucleal::suites
