#include "nucleal/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nucleal/core/error.hpp"

#ifndef NUCLEAL_FIXTURE_DIR
#define NUCLEAL_FIXTURE_DIR "fixtures"
#endif

namespace nucleal::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int label_index(const FinSet& s, const std::string& label, const char* what) {
  int i = s.index_of(label);
  if (i < 0) throw ParseError(std::string(what) + ": unknown label \"" + label + "\"");
  return i;
}

Json bool_rows(const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> bool_matrix(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw ParseError("pairs: expected " + std::to_string(rows) + " rows");
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw ParseError("pairs: expected " + std::to_string(cols) + " columns");
    for (int k = 0; k < cols; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<bool>();
  }
  return m;
}

template <class Scalar, class F>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> numeric_matrix(const Json& j, Eigen::Index rows, Eigen::Index cols, F&& cell) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("matrix: expected " + std::to_string(cols) + " columns");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = cell(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

}  // namespace

Json to_json(const FinSet& s) { return s.labels; }

FinSet finset_from_json(const Json& j) {
  return guarded("set", [&] { return FinSet(j.get<std::vector<std::string>>()); });
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational: expected a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const finrel::Relation& r) {
  return {{"source", to_json(r.source)}, {"target", to_json(r.target)}, {"pairs", bool_rows(r.pairs)}};
}

finrel::Relation relation_from_json(const Json& j) {
  return guarded("relation", [&] {
    auto s = finset_from_json(field(j, "source"));
    auto t = finset_from_json(field(j, "target"));
    return finrel::Relation(s, t, bool_matrix(field(j, "pairs"), s.size(), t.size()));
  });
}

Json to_json(const pinj::PartialInjection& f) {
  Json graph = Json::object();
  for (int x = 0; x < f.source.size(); ++x) {
    if (f.defined(x)) graph[f.source.labels[static_cast<std::size_t>(x)]] = f.target.labels[static_cast<std::size_t>(f(x))];
  }
  return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"graph", graph}};
}

pinj::PartialInjection pinj_from_json(const Json& j) {
  return guarded("partial injection", [&] {
    auto s = finset_from_json(field(j, "source"));
    auto t = finset_from_json(field(j, "target"));
    const auto& g = field(j, "graph");
    if (!g.is_object()) throw ParseError("graph: expected an object");
    std::vector<int> map(static_cast<std::size_t>(s.size()), -1);
    for (const auto& [x, y] : g.items()) {
      map[static_cast<std::size_t>(label_index(s, x, "graph"))] = label_index(t, y.get<std::string>(), "graph");
    }
    return pinj::PartialInjection(s, t, map);
  });
}

Json to_json(const xrel::CommMonoid& m) {
  Json table = Json::array();
  for (const auto& row : m.table) {
    Json r = Json::array();
    for (int v : row) r.push_back(m.elements[static_cast<std::size_t>(v)]);
    table.push_back(r);
  }
  return {{"name", m.name}, {"elements", m.elements}, {"table", table}, {"e", m.elements[static_cast<std::size_t>(m.e)]}};
}

xrel::CommMonoid monoid_from_json(const Json& j) {
  return guarded("monoid", [&] {
    auto els = field(j, "elements").get<std::vector<std::string>>();
    FinSet idx(els);
    const auto& tj = field(j, "table");
    if (!tj.is_array() || tj.size() != els.size()) throw ParseError("table: expected " + std::to_string(els.size()) + " rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
      if (!row.is_array() || row.size() != els.size()) throw ParseError("table: rows must have one entry per element");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(label_index(idx, v.get<std::string>(), "table"));
      table.push_back(r);
    }
    int e = label_index(idx, field(j, "e").get<std::string>(), "e");
    return xrel::CommMonoid(els, table, e, j.value("name", std::string{}));
  });
}

Json to_json(const xrel::CrossedMSet& x) {
  const auto& m = *x.monoid;
  const auto& c = x.carrier.labels;
  Json action = Json::object();
  for (int g = 0; g < m.size(); ++g) {
    Json row = Json::object();
    for (int p = 0; p < x.size(); ++p) row[c[static_cast<std::size_t>(p)]] = c[static_cast<std::size_t>(x.act(g, p))];
    action[m.elements[static_cast<std::size_t>(g)]] = row;
  }
  Json degree = Json::object();
  for (int p = 0; p < x.size(); ++p) degree[c[static_cast<std::size_t>(p)]] = m.elements[static_cast<std::size_t>(x.deg(p))];
  return {{"carrier", c}, {"action", action}, {"degree", degree}};
}

xrel::CrossedMSet mset_from_json(const Json& j, const xrel::MonoidPtr& m) {
  return guarded("crossed M-set", [&] {
    auto carrier = finset_from_json(field(j, "carrier"));
    FinSet els(m->elements);
    const auto n = static_cast<std::size_t>(carrier.size());
    std::vector<std::vector<int>> action(static_cast<std::size_t>(m->size()), std::vector<int>(n, -1));
    const auto& aj = field(j, "action");
    for (const auto& [g, row] : aj.items()) {
      auto gi = static_cast<std::size_t>(label_index(els, g, "action"));
      for (const auto& [p, q] : row.items()) {
        action[gi][static_cast<std::size_t>(label_index(carrier, p, "action"))] = label_index(carrier, q.get<std::string>(), "action");
      }
    }
    for (std::size_t g = 0; g < action.size(); ++g) {
      for (int v : action[g]) {
        if (v < 0) throw ParseError("action: missing entry for element \"" + m->elements[g] + "\"");
      }
    }
    std::vector<int> degree(n, -1);
    for (const auto& [p, d] : field(j, "degree").items()) {
      degree[static_cast<std::size_t>(label_index(carrier, p, "degree"))] = label_index(els, d.get<std::string>(), "degree");
    }
    for (int d : degree) {
      if (d < 0) throw ParseError("degree: every carrier point needs a degree");
    }
    return xrel::CrossedMSet(m, carrier, action, degree);
  });
}

Json to_json(const xrel::XRelMorphism& r) {
  return {{"monoid", to_json(*r.source.monoid)},
          {"source", to_json(r.source)},
          {"target", to_json(r.target)},
          {"pairs", bool_rows(r.pairs)}};
}

xrel::XRelMorphism xrel_from_json(const Json& j) {
  return guarded("xrel morphism", [&] {
    auto m = std::make_shared<const xrel::CommMonoid>(monoid_from_json(field(j, "monoid")));
    auto s = mset_from_json(field(j, "source"), m);
    auto t = mset_from_json(field(j, "target"), m);
    auto p = bool_matrix(field(j, "pairs"), s.size(), t.size());
    return xrel::XRelMorphism(s, t, p);
  });
}

Json to_json(const finhilb::CMatrix<double>& f) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (Eigen::Index k = 0; k < f.cols(); ++k) {
      r.push_back(f(i, k).real());
      c.push_back(f(i, k).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return {{"rows", f.rows()}, {"cols", f.cols()}, {"re", re}, {"im", im}};
}

finhilb::CMatrix<double> cmatrix_from_json(const Json& j) {
  return guarded("complex matrix", [&] {
    auto rows = field(j, "rows").get<Eigen::Index>();
    auto cols = field(j, "cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw ParseError("matrix dimensions must be nonnegative");
    auto real = [](const Json& v) { return v.get<double>(); };
    Eigen::MatrixXd re = numeric_matrix<double>(field(j, "re"), rows, cols, real);
    Eigen::MatrixXd im = j.contains("im") ? numeric_matrix<double>(j.at("im"), rows, cols, real) : Eigen::MatrixXd::Zero(rows, cols);
    finhilb::CMatrix<double> out(rows, cols);
    out.real() = re;
    out.imag() = im;
    finhilb::require_finite(out);
    return out;
  });
}

Json to_json(const finstoch::ProbSpace& p) {
  Json mass = Json::object();
  for (int i = 0; i < p.size(); ++i) mass[p.points.labels[static_cast<std::size_t>(i)]] = to_json(p.mass(i));
  return {{"points", to_json(p.points)}, {"mass", mass}};
}

finstoch::ProbSpace space_from_json(const Json& j) {
  return guarded("probability space", [&] {
    auto pts = finset_from_json(field(j, "points"));
    finstoch::RVector mass = finstoch::RVector::Zero(pts.size());
    for (const auto& [x, m] : field(j, "mass").items()) mass(label_index(pts, x, "mass")) = rational_from_json(m);
    return finstoch::ProbSpace(pts, mass);
  });
}

Json to_json(const finstoch::JointMeasure& a) {
  Json w = Json::array();
  for (Eigen::Index i = 0; i < a.weight.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < a.weight.cols(); ++k) row.push_back(to_json(a.weight(i, k)));
    w.push_back(row);
  }
  return {{"source", to_json(a.source)}, {"target", to_json(a.target)}, {"weight", w}};
}

finstoch::JointMeasure measure_from_json(const Json& j) {
  return guarded("joint measure", [&] {
    auto s = space_from_json(field(j, "source"));
    auto t = space_from_json(field(j, "target"));
    auto w = numeric_matrix<Rational>(field(j, "weight"), s.size(), t.size(), [](const Json& v) { return rational_from_json(v); });
    return finstoch::JointMeasure(s, t, w);
  });
}

Json to_json(const finstoch::StochKernel& k) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < k.rows.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < k.rows.cols(); ++c) row.push_back(to_json(k.rows(i, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const drelnum::Interval& iv) { return {{"lo", iv.lower}, {"hi", iv.upper}, {"n", iv.n}}; }

drelnum::Interval interval_from_json(const Json& j) {
  return guarded("interval", [&] {
    return drelnum::Interval(field(j, "lo").get<double>(), field(j, "hi").get<double>(), field(j, "n").get<int>());
  });
}

Json to_json(const drelnum::Domain& d) {
  Json ivs = Json::array();
  for (const auto& iv : d.factors) ivs.push_back(to_json(iv));
  return {{"intervals", ivs}};
}

drelnum::Domain domain_from_json(const Json& j) {
  return guarded("domain", [&] {
    drelnum::Domain d;
    for (const auto& iv : field(j, "intervals")) d.factors.push_back(interval_from_json(iv));
    return d;
  });
}

Json to_json(const drelnum::GridKernel& k) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < k.samples.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < k.samples.cols(); ++c) row.push_back(k.samples(i, c));
    rows.push_back(row);
  }
  return {{"source", to_json(k.source)}, {"target", to_json(k.target)}, {"samples", rows}, {"smooth", k.smooth}};
}

drelnum::GridKernel kernel_from_json(const Json& j) {
  return guarded("grid kernel", [&] {
    drelnum::Domain s, t;
    if (j.contains("interval")) {
      s = t = drelnum::single(interval_from_json(j.at("interval")));
    } else {
      s = domain_from_json(field(j, "source"));
      t = domain_from_json(field(j, "target"));
    }
    auto m = numeric_matrix<double>(field(j, "samples"), s.size(), t.size(), [](const Json& v) { return v.get<double>(); });
    return drelnum::GridKernel(s, t, m, j.value("smooth", true));
  });
}

Json to_json(const cjsl::FinLattice& l) {
  Json els = Json::array();
  for (int i = 0; i < l.size(); ++i) els.push_back(std::to_string(i));
  Json leq = Json::array();
  for (const auto& row : l.order()) leq.push_back(row);
  Json out = {{"elements", els}, {"leq", leq}};
  if (!l.name().empty()) out["name"] = l.name();
  return out;
}

cjsl::FinLattice lattice_from_json(const Json& j) {
  return guarded("lattice", [&] {
    auto els = field(j, "elements").get<std::vector<std::string>>();
    auto leq = field(j, "leq").get<std::vector<std::vector<bool>>>();
    if (leq.size() != els.size()) throw ParseError("leq: expected one row per element");
    for (const auto& row : leq) {
      if (row.size() != els.size()) throw ParseError("leq: expected one column per element");
    }
    return cjsl::FinLattice(leq, j.value("name", std::string{}));
  });
}

Json to_json(const cjsl::SupMap& f) {
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"values", f.values}};
}

cjsl::SupMap supmap_from_json(const Json& j) {
  return guarded("sup-map", [&] {
    auto s = std::make_shared<const cjsl::FinLattice>(lattice_from_json(field(j, "source")));
    auto t = std::make_shared<const cjsl::FinLattice>(lattice_from_json(field(j, "target")));
    auto v = field(j, "values").get<std::vector<int>>();
    if (static_cast<int>(v.size()) != s->size()) throw ParseError("values: expected one entry per source element");
    for (int x : v) {
      if (x < 0 || x >= t->size()) throw ParseError("values: entry outside the target lattice");
    }
    return cjsl::SupMap(s, t, v);
  });
}

Json to_json(const core::AxiomReport& r) {
  Json failures = Json::array();
  for (const auto& w : r.failures) failures.push_back({{"law", w.law}, {"detail", w.detail}});
  Json parts = Json::array();
  for (const auto& p : r.parts) {
    parts.push_back({{"law", p.law},
                     {"cases", p.cases},
                     {"failed", p.failed},
                     {"skipped", p.skipped},
                     {"exhaustive_size", p.exhaustive_size},
                     {"sampled", p.sampled},
                     {"fully_exhaustive", p.fully_exhaustive},
                     {"reduced", p.reduced}});
  }
  return {{"law", r.law},
          {"instance", r.instance},
          {"passed", r.passed()},
          {"cases", r.cases},
          {"failed_cases", r.failed_cases},
          {"exhaustive", r.exhaustive},
          {"reduced", r.reduced},
          {"coverage", r.coverage()},
          {"elapsed_s", r.elapsed},
          {"parts", parts},
          {"failures", failures},
          {"notes", r.notes}};
}

Manifest manifest_from_json(const Json& j, const std::string& fallback_category) {
  Manifest m;
  if (j.is_object() && j.contains("category") && j.contains("value")) {
    m.category = guarded("manifest", [&] { return j.at("category").get<std::string>(); });
    m.value = j.at("value");
    if (j.contains("tol")) m.tol = guarded("manifest", [&] { return j.at("tol").get<double>(); });
  } else {
    if (fallback_category.empty()) throw ParseError("manifest: missing \"category\" and no --category given");
    m.category = fallback_category;
    m.value = j;
  }
  if (!fallback_category.empty() && m.category != fallback_category) {
    throw ParseError("manifest category \"" + m.category + "\" differs from --category " + fallback_category);
  }
  static const std::vector<std::string> known = {"finrel", "pinj", "xrel", "finhilb", "finstoch", "drelnum", "cjsl"};
  if (std::find(known.begin(), known.end(), m.category) == known.end()) {
    throw ParseError("unknown category \"" + m.category + "\"; expected finrel, pinj, xrel, finhilb, finstoch, drelnum or cjsl");
  }
  return m;
}

Json to_json(const Manifest& m) {
  Json j = {{"category", m.category}, {"value", m.value}};
  if (m.tol) j["tol"] = *m.tol;
  return j;
}

Json parse(const std::string& text) {
  return guarded("json", [&] { return Json::parse(text); });
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("NUCLEAL_FIXTURES"); env && *env) return env;
  return NUCLEAL_FIXTURE_DIR;
}

std::vector<drelnum::GridKernel> DrelFamily::kernels() const {
  std::vector<drelnum::GridKernel> out;
  for (const auto& b : bumps) out.push_back(drelnum::gaussian_kernel(interval, interval, b));
  return out;
}

DrelFamily DrelFamily::refined() const {
  auto r = *this;
  r.interval = interval.refined();
  return r;
}

DrelFamily drel_family_from_json(const Json& j) {
  return guarded("drelnum family", [&] {
    DrelFamily f;
    f.interval = interval_from_json(field(j, "interval"));
    f.tol = j.value("tol", 1e-6);
    for (const auto& b : field(j, "bumps")) {
      f.bumps.push_back({b.value("name", std::string{}), field(b, "x0").get<double>(), field(b, "y0").get<double>(),
                         field(b, "s").get<double>()});
    }
    if (f.bumps.empty()) throw ParseError("drelnum family: no bumps");
    return f;
  });
}

DrelFamily load_drel_family() { return drel_family_from_json(read_file(fixture_dir() / "drelnum_family.json")); }

}  // namespace nucleal::io
