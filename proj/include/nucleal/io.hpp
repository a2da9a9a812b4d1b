#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nucleal/cjsl.hpp"
#include "nucleal/core/report.hpp"
#include "nucleal/drelnum.hpp"
#include "nucleal/finhilb.hpp"
#include "nucleal/finrel.hpp"
#include "nucleal/finstoch.hpp"
#include "nucleal/pinj.hpp"
#include "nucleal/xrel.hpp"

/// JSON schemas for every instance. Readers throw ParseError on malformed
/// documents and let the type constructors raise InvariantError.
namespace nucleal::io {

using Json = nlohmann::json;

/// Version stamped into every report document.
inline constexpr int kReportSchema = 1;

Json to_json(const FinSet& s);
FinSet finset_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// finrel: {"source":[...], "target":[...], "pairs":[[bool,...],...]}
Json to_json(const finrel::Relation& r);
finrel::Relation relation_from_json(const Json& j);

// pinj: {"source":[...], "target":[...], "graph":{"x":"y",...}}
Json to_json(const pinj::PartialInjection& f);
pinj::PartialInjection pinj_from_json(const Json& j);

// xrel: monoid {"elements":[...], "table":[[...]], "e":...}; object
// {"carrier":[...], "action":{"m":{"x":"y"}}, "degree":{"x":"m"}};
// morphism {"monoid":..., "source":..., "target":..., "pairs":[[bool]]}.
Json to_json(const xrel::CommMonoid& m);
xrel::CommMonoid monoid_from_json(const Json& j);
Json to_json(const xrel::CrossedMSet& x);
xrel::CrossedMSet mset_from_json(const Json& j, const xrel::MonoidPtr& m);
Json to_json(const xrel::XRelMorphism& r);
xrel::XRelMorphism xrel_from_json(const Json& j);

// finhilb: {"rows":n, "cols":m, "re":[[...]], "im":[[...]]}
Json to_json(const finhilb::CMatrix<double>& f);
finhilb::CMatrix<double> cmatrix_from_json(const Json& j);

// finstoch: space {"points":[...], "mass":{"x":"p/q"}}; morphism
// {"source":..., "target":..., "weight":[["p/q",...]]}.
Json to_json(const finstoch::ProbSpace& p);
finstoch::ProbSpace space_from_json(const Json& j);
Json to_json(const finstoch::JointMeasure& a);
finstoch::JointMeasure measure_from_json(const Json& j);
Json to_json(const finstoch::StochKernel& k);

// drelnum: {"source":{"intervals":[...]}, "target":..., "samples":[[...]],
// "smooth":bool}. The short form {"interval":{"lo","hi","n"}, "samples"}
// is an endomorphism of one interval.
Json to_json(const drelnum::Interval& iv);
drelnum::Interval interval_from_json(const Json& j);
Json to_json(const drelnum::Domain& d);
drelnum::Domain domain_from_json(const Json& j);
Json to_json(const drelnum::GridKernel& k);
drelnum::GridKernel kernel_from_json(const Json& j);

// cjsl: lattice {"elements":[...], "leq":[[bool]]}; map {"source", "target", "values":[...]}.
Json to_json(const cjsl::FinLattice& l);
cjsl::FinLattice lattice_from_json(const Json& j);
Json to_json(const cjsl::SupMap& f);
cjsl::SupMap supmap_from_json(const Json& j);

Json to_json(const core::AxiomReport& r);

/// {"category": name, "value": payload, "tol": optional}. A bare payload
/// is accepted when `fallback_category` is given.
struct Manifest {
  std::string category;
  Json value;
  std::optional<double> tol;
};
Manifest manifest_from_json(const Json& j, const std::string& fallback_category = {});
Json to_json(const Manifest& m);

Json parse(const std::string& text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

/// $NUCLEAL_FIXTURES, else the fixtures directory of the source tree.
std::filesystem::path fixture_dir();

/// Gaussian-bump kernels on one interval.
struct DrelFamily {
  drelnum::Interval interval;
  std::vector<drelnum::GaussianBump> bumps;
  double tol = 1e-6;

  [[nodiscard]] std::vector<drelnum::GridKernel> kernels() const;
  [[nodiscard]] DrelFamily refined() const;
};
DrelFamily drel_family_from_json(const Json& j);
DrelFamily load_drel_family();

}  // namespace nucleal::io
