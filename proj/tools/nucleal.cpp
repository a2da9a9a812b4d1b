#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nucleal/cjsl.hpp"
#include "nucleal/core/category.hpp"
#include "nucleal/core/error.hpp"
#include "nucleal/core/harness.hpp"
#include "nucleal/io.hpp"
#include "nucleal/suites.hpp"

using namespace nucleal;
using io::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kShape = 3, kInvariant = 4, kNotTraceClass = 5 };

struct Options {
  std::string category;
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::optional<int> n;
  std::string format = "text";
  std::string out;
  bool inverse = false;
  int search_bound = 3;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

io::Manifest load(const Options& o, const std::string& path) {
  return io::manifest_from_json(io::read_file(path), o.category);
}

// Per-instance parsing and printing.
template <class C>
struct Codec;

template <>
struct Codec<finrel::Category> {
  static finrel::Category category(const Json&, std::optional<double>) { return {}; }
  static finrel::Relation morphism(const Json& j) { return io::relation_from_json(j); }
  static FinSet object(const Json& j, const Json&) { return io::finset_from_json(j); }
  static Json save(const finrel::Relation& r) { return io::to_json(r); }
};

template <>
struct Codec<pinj::Category> {
  static pinj::Category category(const Json&, std::optional<double>) { return {}; }
  static pinj::PartialInjection morphism(const Json& j) { return io::pinj_from_json(j); }
  static FinSet object(const Json& j, const Json&) { return io::finset_from_json(j); }
  static Json save(const pinj::PartialInjection& f) { return io::to_json(f); }
};

template <>
struct Codec<xrel::Category> {
  static xrel::Category category(const Json& payload, std::optional<double>) {
    const Json& m = payload.contains("monoid") ? payload.at("monoid") : payload.at("element").at("monoid");
    return xrel::Category(io::monoid_from_json(m));
  }
  static xrel::XRelMorphism morphism(const Json& j) { return io::xrel_from_json(j); }
  static xrel::CrossedMSet object(const Json& j, const Json& payload) {
    auto m = std::make_shared<const xrel::CommMonoid>(io::monoid_from_json(payload.at("element").at("monoid")));
    return io::mset_from_json(j, m);
  }
  static Json save(const xrel::XRelMorphism& r) { return io::to_json(r); }
};

template <>
struct Codec<finhilb::Category> {
  static finhilb::Category category(const Json&, std::optional<double> tol) { return finhilb::Category(tol.value_or(1e-10)); }
  static finhilb::CMatrix<double> morphism(const Json& j) { return io::cmatrix_from_json(j); }
  static int object(const Json& j, const Json&) {
    if (!j.is_number_integer() || j.get<int>() < 0) throw ParseError("finhilb object: expected a dimension");
    return j.get<int>();
  }
  static Json save(const finhilb::CMatrix<double>& f) { return io::to_json(f); }
};

template <>
struct Codec<finstoch::Category> {
  static finstoch::Category category(const Json&, std::optional<double>) { return {}; }
  static finstoch::JointMeasure morphism(const Json& j) { return io::measure_from_json(j); }
  static finstoch::ProbSpace object(const Json& j, const Json&) { return io::space_from_json(j); }
  static Json save(const finstoch::JointMeasure& a) { return io::to_json(a); }
};

template <>
struct Codec<drelnum::Category> {
  static drelnum::Category category(const Json&, std::optional<double> tol) { return drelnum::Category(tol.value_or(1e-6)); }
  static drelnum::GridKernel morphism(const Json& j) { return io::kernel_from_json(j); }
  static drelnum::Domain object(const Json& j, const Json&) { return io::domain_from_json(j); }
  static Json save(const drelnum::GridKernel& k) { return io::to_json(k); }
};

// Calls fn(Codec<C>{}) for the named instance; cjsl is handled by callers.
template <class F>
int dispatch(const std::string& name, F&& fn) {
  if (name == "finrel") return fn(Codec<finrel::Category>{});
  if (name == "pinj") return fn(Codec<pinj::Category>{});
  if (name == "xrel") return fn(Codec<xrel::Category>{});
  if (name == "finhilb") return fn(Codec<finhilb::Category>{});
  if (name == "finstoch") return fn(Codec<finstoch::Category>{});
  if (name == "drelnum") return fn(Codec<drelnum::Category>{});
  throw ParseError("unknown category \"" + name + "\"; expected finrel, pinj, xrel, finhilb, finstoch, drelnum or cjsl");
}

Json wrap(const io::Manifest& like, const Json& value) {
  io::Manifest m{like.category, value, like.tol};
  return io::to_json(m);
}

int cmd_compose(const Options& o, const std::string& file_f, const std::string& file_g) {
  auto mf = load(o, file_f);
  auto mg = load(o, file_g);
  if (mf.category != mg.category) throw ParseError("inputs belong to different categories");
  if (mf.category == "cjsl") {
    auto f = io::supmap_from_json(mf.value), g = io::supmap_from_json(mg.value);
    if (!(*f.target == *g.source)) {
      throw ShapeError("target of f " + io::to_json(*f.target).dump() + " differs from source of g " + io::to_json(*g.source).dump());
    }
    emit(o, wrap(mf, io::to_json(cjsl::compose(f, g))).dump(2));
    return kOk;
  }
  return dispatch(mf.category, [&](auto codec) {
    using K = decltype(codec);
    auto cat = K::category(mf.value, o.tol ? o.tol : mf.tol);
    auto f = K::morphism(mf.value);
    auto g = K::morphism(mg.value);
    if (!cat.same(cat.target(f), cat.source(g))) {
      throw ShapeError("target of f " + cat.describe(cat.target(f)) + " differs from source of g " + cat.describe(cat.source(g)));
    }
    emit(o, wrap(mf, K::save(cat.compose(g, f))).dump(2));
    return static_cast<int>(kOk);
  });
}

int cmd_trace(const Options& o, const std::string& file_h) {
  auto mh = load(o, file_h);
  if (mh.category == "cjsl") throw ParseError("cjsl has no trace");
  return dispatch(mh.category, [&](auto codec) {
    using K = decltype(codec);
    auto cat = K::category(mh.value, o.tol ? o.tol : mh.tol);
    using C = decltype(cat);
    auto h = K::morphism(mh.value);
    if constexpr (core::HasTraceIdeal<C>) {
      if (!cat.same(cat.source(h), cat.target(h))) throw ShapeError("trace needs an endomorphism, got " + cat.describe(h));
      if (!cat.in_trace_class(h)) {
        std::string why = cat.describe(h);
        if constexpr (core::Enumerable<C> && core::HasNuclearIdeal<C>) {
          auto search = core::find_nuclear_factorization(cat, h, o.search_bound);
          if (!search.fg) why += "; no nuclear factorization through objects of size <= " + std::to_string(o.search_bound);
        }
        throw TraceClassError(why);
      }
      std::ostringstream text;
      text << cat.describe_scalar(cat.trace(h)) << '\n';
      if constexpr (core::Factorizes<C>) {
        if (auto fg = cat.factorize(h)) {
          text << "factorization: f = " << cat.describe(fg->first) << " ; g = " << cat.describe(fg->second) << '\n';
          text << "derived: " << cat.describe_scalar(core::derive_trace(cat, fg->first, fg->second)) << '\n';
        }
      }
      emit(o, text.str());
      return static_cast<int>(kOk);
    } else {
      throw ParseError(cat.name() + " has no trace");
      return static_cast<int>(kParse);
    }
  });
}

int cmd_transpose(const Options& o, const std::string& file) {
  auto m = load(o, file);
  if (m.category == "cjsl") throw ParseError("cjsl has no theta");
  return dispatch(m.category, [&](auto codec) {
    using K = decltype(codec);
    auto cat = K::category(m.value, o.tol ? o.tol : m.tol);
    if (o.inverse) {
      // {"element": m : I -> A x B, "source": A, "target": B}
      const auto& v = m.value;
      if (!v.contains("element") || !v.contains("source") || !v.contains("target")) {
        throw ParseError("theta inverse expects {\"element\", \"source\", \"target\"}");
      }
      auto e = K::morphism(v.at("element"));
      auto a = K::object(v.at("source"), v);
      auto b = K::object(v.at("target"), v);
      emit(o, wrap(m, K::save(cat.theta_inv(e, a, b))).dump(2));
    } else {
      auto f = K::morphism(m.value);
      if (!cat.is_nuclear(f)) throw PreconditionError("theta needs a nuclear morphism: " + cat.describe(f));
      emit(o, wrap(m, K::save(cat.theta(f))).dump(2));
    }
    return static_cast<int>(kOk);
  });
}

int cmd_check_nuclear(const Options& o, const std::string& file) {
  auto m = load(o, file);
  if (m.category == "cjsl") {
    auto f = io::supmap_from_json(m.value);
    auto w = cjsl::is_nuclear_morphism(f);
    Json out = {{"nuclear", w.nuclear}, {"inconclusive", w.inconclusive}, {"candidates", w.candidates}};
    if (w.witness) out["witness"] = io::to_json(*w.witness);
    if (o.format == "json") {
      emit(o, out.dump(2));
    } else {
      emit(o, std::string(w.inconclusive ? "inconclusive" : w.nuclear ? "nuclear" : "not nuclear") +
                  (w.witness ? "\nwitness g = " + w.witness->describe() : ""));
    }
    return kOk;
  }
  return dispatch(m.category, [&](auto codec) {
    using K = decltype(codec);
    auto cat = K::category(m.value, o.tol ? o.tol : m.tol);
    auto f = K::morphism(m.value);
    const bool nuc = cat.is_nuclear(f);
    emit(o, o.format == "json" ? Json{{"nuclear", nuc}}.dump(2) : std::string(nuc ? "nuclear" : "not nuclear"));
    return static_cast<int>(kOk);
  });
}

int cmd_disintegrate(const Options& o, const std::string& file) {
  auto m = load(o, file);
  if (m.category != "finstoch") throw ParseError("disintegrate applies to finstoch measures");
  auto a = io::measure_from_json(m.value);
  auto [q1, q2] = finstoch::disintegrate(a);
  auto [mx, my] = finstoch::marginals(a);
  Json mxj = Json::array(), myj = Json::array();
  for (Eigen::Index i = 0; i < mx.size(); ++i) mxj.push_back(io::to_json(mx(i)));
  for (Eigen::Index i = 0; i < my.size(); ++i) myj.push_back(io::to_json(my(i)));
  Json out = {{"q1", io::to_json(q1)}, {"q2", io::to_json(q2)}, {"marginal_source", mxj}, {"marginal_target", myj}};
  emit(o, out.dump(2));
  return kOk;
}

core::RunConfig run_config(const Options& o) {
  core::RunConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  return cfg;
}

int cmd_verify(const Options& o, const std::string& suite) {
  if (!suites::is_suite(suite)) {
    std::string names;
    for (const auto& n : suites::suite_names()) names += " " + n;
    throw ParseError("unknown suite \"" + suite + "\"; expected one of:" + names);
  }
  auto r = suites::run_suite(suite, run_config(o), {o.tol, o.n});
  emit(o, o.format == "json" ? suites::to_json(r).dump(2) : suites::to_text(r));
  return r.passed() ? kOk : kFailed;
}

int cmd_report(const Options& o) {
  std::vector<suites::SuiteResult> rs;
  for (const auto& n : suites::suite_names()) {
    if (n != "all") rs.push_back(suites::run_suite(n, run_config(o), {o.tol, o.n}));
  }
  bool ok = true;
  std::string text;
  for (const auto& r : rs) {
    ok = ok && r.passed();
    text += suites::to_text(r);
  }
  emit(o, o.format == "json" ? suites::to_json(rs).dump(2) : text);
  return ok ? kOk : kFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Nuclear and trace ideals in tensored *-categories: compose, trace, transpose and verify."};
  app.require_subcommand(1);
  Options o;
  std::string f, g, suite;
  auto common = [&](CLI::App* c) {
    c->add_option("--category", o.category, "finrel|pinj|xrel|finhilb|finstoch|drelnum|cjsl");
    c->add_option("--tol", o.tol, "tolerance for numeric instances");
    c->add_option("--out", o.out, "write the result here instead of stdout");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* compose = app.add_subcommand("compose", "f then g");
  compose->add_option("f", f)->required();
  compose->add_option("g", g)->required();
  common(compose);
  auto* trace = app.add_subcommand("trace", "trace of an endomorphism in the trace class");
  trace->add_option("endomorphism", f)->required();
  trace->add_option("--search", o.search_bound, "largest middle object tried when no factorization is known");
  common(trace);
  auto* transpose = app.add_subcommand("transpose", "theta of a nuclear morphism, or theta inverse with --inverse");
  transpose->add_option("file", f)->required();
  transpose->add_flag("--inverse", o.inverse);
  common(transpose);
  auto* nuclear = app.add_subcommand("check-nuclear", "membership in the nuclear ideal");
  nuclear->add_option("file", f)->required();
  common(nuclear);
  auto* dis = app.add_subcommand("disintegrate", "conditional kernels of a finstoch measure");
  dis->add_option("file", f)->required();
  common(dis);
  auto suite_opts = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "sampled cases per law");
    c->add_option("--seed", o.seed, "seed of the case generator");
    c->add_option("--n", o.n, "grid nodes of the drelnum fixture (odd)");
    common(c);
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  suite_opts(verify);
  auto* report = app.add_subcommand("report", "run every suite and write one report");
  suite_opts(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*compose) return cmd_compose(o, f, g);
    if (*trace) return cmd_trace(o, f);
    if (*transpose) return cmd_transpose(o, f);
    if (*nuclear) return cmd_check_nuclear(o, f);
    if (*dis) return cmd_disintegrate(o, f);
    if (*verify) return cmd_verify(o, suite);
    if (*report) return cmd_report(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ShapeError& e) {
    std::cerr << "shape mismatch: " << e.what() << '\n';
    return kShape;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const TraceClassError& e) {
    std::cerr << "not in trace class: " << e.what() << '\n';
    return kNotTraceClass;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
