#include "doctest.h"

#include "nucleal/core/harness.hpp"
#include "nucleal/finrel.hpp"

using namespace nucleal;
using namespace nucleal::finrel;

namespace {

// Independent existential-loop composition.
Relation compose_oracle(const Relation& r, const Relation& s) {
  Relation out(r.source, s.target);
  for (int x = 0; x < r.source.size(); ++x) {
    for (int z = 0; z < s.target.size(); ++z) {
      bool any = false;
      for (int y = 0; y < r.target.size(); ++y) any = any || (r.holds(x, y) && s.holds(y, z));
      out.pairs(x, z) = any;
    }
  }
  return out;
}

Relation from_pairs(const FinSet& x, const FinSet& y, std::initializer_list<std::pair<int, int>> ps) {
  Relation r(x, y);
  for (auto [a, b] : ps) r.pairs(a, b) = true;
  return r;
}

}  // namespace

TEST_CASE("composition chains pairs") {
  FinSet x({"1"}), y({"a"}), z({"2"});
  auto r = from_pairs(x, y, {{0, 0}});
  auto s = from_pairs(y, z, {{0, 0}});
  auto rs = compose(r, s);
  CHECK(rs.holds(0, 0));
  CHECK(equal(compose(r, identity(y)), r));
}

TEST_CASE("composition agrees with the existential oracle") {
  Category cat;
  core::Lcg rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = cat.sample_object(rng, 4), b = cat.sample_object(rng, 4), c = cat.sample_object(rng, 4);
    auto r = cat.sample_morphism(rng, a, b);
    auto s = cat.sample_morphism(rng, b, c);
    REQUIRE(equal(compose(r, s), compose_oracle(r, s)));
  }
}

TEST_CASE("composition rejects mismatched objects") {
  CHECK_THROWS_AS(compose(Relation(FinSet::range(1), FinSet::range(2)), Relation(FinSet::range(3), FinSet::range(1))),
                  ShapeError);
  CHECK_THROWS_AS(Relation(FinSet::range(2), FinSet::range(2), BoolMatrix::Zero(1, 2)), InvariantError);
}

TEST_CASE("unit and counit") {
  FinSet a({"a"});
  auto n = nu(a);
  CHECK(n.pairs.rows() == 1);
  CHECK(n.pairs.cols() == 1);
  CHECK(n.holds(0, 0));
  CHECK(nu(FinSet::range(0)).pairs.size() == 0);
}

TEST_CASE("adjunction triangles for sets up to five elements") {
  for (int n = 0; n <= 5; ++n) {
    auto x = FinSet::range(n);
    auto id = identity(x);
    auto left = compose(tensor(nu(x), id), tensor(id, psi(x)));
    auto right = compose(tensor(id, nu(x)), tensor(psi(x), id));
    CHECK(equal(left, id));
    CHECK(equal(right, id));
  }
}

TEST_CASE("trace of an endorelation") {
  auto x = FinSet::range(2);
  CHECK(trace_endo(from_pairs(FinSet::range(1), FinSet::range(1), {{0, 0}})));
  CHECK_FALSE(trace_endo(from_pairs(x, x, {{0, 1}, {1, 0}})));
  CHECK(trace_endo(identity(x)));
  CHECK_THROWS_AS(trace_endo(Relation(x, FinSet::range(3))), ShapeError);
}

TEST_CASE("trace equals the compact closed composite") {
  Category cat;
  for (int n = 0; n <= 3; ++n) {
    auto x = FinSet::range(n);
    for (const auto& r : cat.morphisms(x, x)) {
      auto loop = compose(compose(compose(nu(x), tensor(r, identity(x))), symmetry(x, x)), psi(x));
      REQUIRE(loop.holds(0, 0) == trace_endo(r));
    }
  }
}

TEST_CASE("parametrized trace") {
  FinSet a({"a"}), b({"b"}), u({"u", "v"});
  Relation r(product(a, u), product(b, u));
  r.pairs(0, 0) = true;  // (a,u) -> (b,u)
  CHECK(param_trace(r, a, b, u).holds(0, 0));
  Relation r2(product(a, u), product(b, u));
  r2.pairs(0, 1) = true;  // (a,u) -> (b,v)
  CHECK_FALSE(param_trace(r2, a, b, u).holds(0, 0));
  auto g = from_pairs(a, b, {{0, 0}});
  CHECK(equal(param_trace(g, a, b, unit()), g));
}

TEST_CASE("theta round trip") {
  Category cat;
  auto x = FinSet::range(2), y = FinSet::range(3);
  for (const auto& r : cat.morphisms(x, y)) REQUIRE(equal(theta_inv(theta(r), x, y), r));
}

TEST_CASE("harness: star laws exhaustive at size three") {
  Category cat;
  core::RunConfig cfg;
  cfg.budget = 500;
  cfg.seed = 7;
  auto rep = core::check_star_laws(cat, cfg);
  CHECK(rep.passed());
  CHECK(rep.cases > 0);
}

TEST_CASE("harness: empty budget runs nothing") {
  Category cat;
  core::RunConfig cfg;
  cfg.budget = 0;
  cfg.seed = 0;
  auto rep = core::check_star_laws(cat, cfg);
  CHECK(rep.cases == 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("harness: nuclear, trace and parametrized trace axioms") {
  Category cat;
  core::RunConfig cfg;
  cfg.budget = 200;
  cfg.seed = 3;
  CHECK(core::check_category_laws(cat, cfg).passed());
  CHECK(core::check_nuclear_axioms(cat, cfg).passed());
  CHECK(core::check_sliding(cat, cfg).passed());
  CHECK(core::check_tracedness(cat, cfg).passed());
  cfg.size = 2;
  CHECK(core::check_trace_axioms(cat, cfg).passed());
  auto pt = core::check_param_trace_axioms(cat, cfg);
  for (const auto& w : pt.failures) MESSAGE(w.law << ": " << w.detail);
  CHECK(pt.passed());
}

TEST_CASE("generalized yanking against the existential formula") {
  Category cat;
  core::Lcg rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = cat.sample_object(rng, 3), u = cat.sample_object(rng, 3), b = cat.sample_object(rng, 3);
    auto f = cat.sample_morphism(rng, a, u);
    auto g = cat.sample_morphism(rng, u, b);
    auto y = compose(tensor(f, g), symmetry(u, b));
    REQUIRE(equal(param_trace(y, a, b, u), compose_oracle(f, g)));
  }
}
