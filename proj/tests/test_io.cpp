#include "doctest.h"

#include <cstring>

#include "nucleal/io.hpp"
#include "nucleal/suites.hpp"

using namespace nucleal;
using io::Json;

namespace {

// Serialize, print, reparse and deserialize, the way files travel.
template <class T, class Read>
T through_text(const T& v, Read read) {
  return read(io::parse(io::to_json(v).dump()));
}

bool same_bits(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) == 0;
}

}  // namespace

TEST_CASE("finrel and pinj round-trip") {
  core::Lcg rng(11);
  finrel::Category rel;
  pinj::Category inj;
  for (int k = 0; k < 200; ++k) {
    auto a = rel.sample_object(rng, 4), b = rel.sample_object(rng, 4);
    auto r = rel.sample_morphism(rng, a, b);
    auto r2 = through_text(r, io::relation_from_json);
    CHECK(rel.equal(r, r2));
    CHECK(io::to_json(r2) == io::to_json(r));
    auto f = inj.sample_morphism(rng, a, b);
    auto f2 = through_text(f, io::pinj_from_json);
    CHECK(inj.equal(f, f2));
  }
  auto ab = rel.tensor(FinSet::range(2), FinSet::range(2));
  CHECK(through_text(ab, io::finset_from_json) == ab);
}

TEST_CASE("rational round-trip") {
  for (const auto& r : {Rational(0), Rational(1, 3), Rational(-7, 2), Rational(123456789, 1000)}) {
    CHECK(through_text(r, io::rational_from_json) == r);
  }
  CHECK(io::rational_from_json(Json(4)) == Rational(4));
  CHECK(io::rational_from_json(Json("2/4")) == Rational(1, 2));
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("x")), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), ParseError);
}

TEST_CASE("xrel round-trip") {
  core::Lcg rng(5);
  for (int n : {2, 3, 4}) {
    xrel::Category cat(xrel::CommMonoid::cyclic(n));
    CHECK(through_text(*cat.monoid(), io::monoid_from_json) == *cat.monoid());
    for (int k = 0; k < 50; ++k) {
      auto a = cat.sample_object(rng, 2), b = cat.sample_object(rng, 2);
      auto r = cat.sample_morphism(rng, a, b);
      auto r2 = through_text(r, io::xrel_from_json);
      CHECK(cat.equal(r, r2));
      CHECK(cat.same(cat.source(r2), a));
      CHECK(cat.same(cat.target(r2), b));
    }
  }
}

TEST_CASE("finhilb round-trip is bit-exact") {
  core::Lcg rng(3);
  finhilb::Category cat;
  for (int k = 0; k < 100; ++k) {
    auto f = cat.sample_morphism(rng, cat.sample_object(rng, 4), cat.sample_object(rng, 4));
    auto g = through_text(f, io::cmatrix_from_json);
    CHECK(same_bits(f.real(), g.real()));
    CHECK(same_bits(f.imag(), g.imag()));
  }
  auto real_only = io::cmatrix_from_json(io::parse(R"({"rows":1,"cols":2,"re":[[1.5,-2]]})"));
  CHECK(real_only(0, 1) == std::complex<double>(-2, 0));
  CHECK_THROWS_AS(io::cmatrix_from_json(io::parse(R"({"rows":2,"cols":2,"re":[[1,2]]})")), ParseError);
}

TEST_CASE("finstoch round-trip") {
  core::Lcg rng(9);
  finstoch::Category cat;
  for (int k = 0; k < 100; ++k) {
    auto x = cat.sample_object(rng, 3), y = cat.sample_object(rng, 3);
    CHECK(finstoch::same_space(through_text(x, io::space_from_json), x));
    auto a = cat.sample_morphism(rng, x, y);
    CHECK(cat.equal(through_text(a, io::measure_from_json), a));
  }
  // Marginals must match the declared masses.
  CHECK_THROWS_AS(io::measure_from_json(io::parse(R"({"source":{"points":["a"],"mass":{"a":"1"}},
      "target":{"points":["b"],"mass":{"b":"1/2"}},"weight":[["1"]]})")),
                  InvariantError);
}

TEST_CASE("drelnum round-trip is bit-exact") {
  core::Lcg rng(2);
  drelnum::Category cat;
  for (int k = 0; k < 30; ++k) {
    auto a = cat.sample_object(rng, 2), b = cat.sample_object(rng, 2);
    auto f = cat.sample_morphism(rng, a, b);
    auto g = through_text(f, io::kernel_from_json);
    CHECK(g.source == f.source);
    CHECK(g.target == f.target);
    CHECK(g.smooth == f.smooth);
    CHECK(same_bits(f.samples, g.samples));
  }
  auto short_form = io::kernel_from_json(io::parse(R"({"interval":{"lo":0,"hi":1,"n":3},"samples":[[0,0,0],[0,1,0],[0,0,0]]})"));
  CHECK(short_form.source == short_form.target);
  CHECK(short_form.samples(1, 1) == 1.0);
  auto fam = io::load_drel_family();
  CHECK(fam.interval.n == 201);
  CHECK(fam.bumps.size() == 5);
}

TEST_CASE("cjsl round-trip") {
  for (const auto& l : cjsl::lattices_up_to(4)) {
    auto p = std::make_shared<const cjsl::FinLattice>(l);
    CHECK(through_text(l, io::lattice_from_json) == l);
    for (const auto& f : cjsl::all_sup_maps(p, p)) {
      auto g = through_text(f, io::supmap_from_json);
      CHECK(g.values == f.values);
      CHECK(*g.source == *f.source);
    }
  }
  // Not a lattice: two incomparable elements with no top.
  CHECK_THROWS_AS(io::lattice_from_json(io::parse(R"({"elements":["a","b"],"leq":[[true,false],[false,true]]})")),
                  InvariantError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::parse("{\"a\": "), ParseError);
  CHECK_THROWS_AS(io::relation_from_json(io::parse(R"({"source":["a"]})")), ParseError);
  CHECK_THROWS_AS(io::relation_from_json(io::parse(R"({"source":["a"],"target":["b"],"pairs":[[1]]})")), ParseError);
  CHECK_THROWS_AS(io::pinj_from_json(io::parse(R"({"source":["a"],"target":["b"],"graph":{"a":"c"}})")), ParseError);
  CHECK_THROWS_AS(io::pinj_from_json(io::parse(R"({"source":["a","b"],"target":["c"],"graph":{"a":"c","b":"c"}})")),
                  InvariantError);
  CHECK_THROWS_AS(io::finset_from_json(io::parse(R"(["a","a"])")), InvariantError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("manifest") {
  auto m = io::manifest_from_json(io::parse(R"({"category":"finhilb","value":{"rows":1,"cols":1,"re":[[2]]},"tol":1e-8})"));
  CHECK(m.category == "finhilb");
  REQUIRE(m.tol);
  CHECK(*m.tol == 1e-8);
  auto back = io::manifest_from_json(io::to_json(m));
  CHECK(back.category == m.category);
  CHECK(back.value == m.value);
  auto bare = io::manifest_from_json(io::parse(R"({"rows":1,"cols":1,"re":[[2]]})"), "finhilb");
  CHECK(bare.category == "finhilb");
  CHECK_THROWS_AS(io::manifest_from_json(io::parse(R"({"rows":1})")), ParseError);
  CHECK_THROWS_AS(io::manifest_from_json(io::parse(R"({"category":"finrel","value":{}})"), "pinj"), ParseError);
  CHECK_THROWS_AS(io::manifest_from_json(io::parse(R"({"category":"sets","value":{}})")), ParseError);
}

TEST_CASE("suite reports") {
  core::RunConfig cfg;
  auto r = suites::run_suite("xrel-audit", cfg);
  CHECK(r.passed());
  auto j = suites::to_json(r);
  CHECK(j.at("schema") == io::kReportSchema);
  CHECK(j.at("suite") == "xrel-audit");
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("documented_findings").size() == 1);
  CHECK(j.at("documented_findings")[0].at("reproduced") == true);
  CHECK(j.at("reports").size() == r.reports.size());
  CHECK(suites::to_json(std::vector{r}).at("schema") == io::kReportSchema);
  CHECK_THROWS_AS(suites::run_suite("nope", cfg), ParseError);
  CHECK(suites::is_suite("all"));
  CHECK(suites::suite_names().size() == 11);
}
