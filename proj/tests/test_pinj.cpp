#include "doctest.h"

#include <set>

#include "nucleal/core/harness.hpp"
#include "nucleal/pinj.hpp"
#include "nucleal/suites.hpp"

using namespace nucleal;
using namespace nucleal::pinj;

namespace {

PartialInjection make(int n, int m, std::vector<int> map) { return {FinSet::range(n), FinSet::range(m), std::move(map)}; }

// Graph-as-set oracle for the tensor product.
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> tensor_graph(const PartialInjection& f,
                                                                           const PartialInjection& g) {
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (int x = 0; x < f.source.size(); ++x) {
    for (int u = 0; u < g.source.size(); ++u) {
      if (f.defined(x) && g.defined(u)) out.insert({{x, u}, {f(x), g(u)}});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("composition, converse and tensor") {
  auto f = make(1, 1, {0});
  auto g = make(1, 1, {0});
  CHECK(equal(compose(f, g), make(1, 1, {0})));
  auto xy = make(2, 2, {1, -1});
  CHECK(equal(converse(xy), make(2, 2, {-1, 0})));
  Category cat;
  core::Lcg rng(2);
  for (int i = 0; i < 200; ++i) {
    auto a = cat.sample_object(rng, 3), b = cat.sample_object(rng, 3);
    auto c = cat.sample_object(rng, 3), d = cat.sample_object(rng, 3);
    auto p = cat.sample_morphism(rng, a, b);
    auto q = cat.sample_morphism(rng, c, d);
    auto t = tensor(p, q);
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got;
    for (int i2 = 0; i2 < t.source.size(); ++i2) {
      if (t.defined(i2)) got.insert({{i2 / c.size(), i2 % c.size()}, {t(i2) / d.size(), t(i2) % d.size()}});
    }
    REQUIRE(got == tensor_graph(p, q));
  }
}

TEST_CASE("construction rejects non-injective maps") {
  CHECK_THROWS_AS(make(2, 2, {0, 0}), InvariantError);
  CHECK_THROWS_AS(make(2, 2, {0, 5}), InvariantError);
  CHECK_THROWS_AS(compose(make(1, 2, {0}), make(3, 1, {0, -1, -1})), ShapeError);
}

TEST_CASE("nuclear morphisms have at most one domain point") {
  CHECK(is_nuclear(make(2, 2, {-1, -1})));
  CHECK(is_nuclear(make(2, 2, {1, -1})));
  CHECK_FALSE(is_nuclear(make(2, 2, {1, 0})));
}

TEST_CASE("theta") {
  auto f = make(2, 3, {-1, 2});
  auto t = theta(f);
  CHECK(t(0) == 1 * 3 + 2);
  CHECK(equal(theta_inv(t, f.source, f.target), f));
  CHECK_FALSE(theta(make(2, 2, {-1, -1})).defined(0));
  CHECK_THROWS_AS(theta(make(2, 2, {0, 1})), PreconditionError);
}

TEST_CASE("compactness composite for single pairs") {
  Category cat;
  auto f = make(2, 2, {1, -1});  // x -> y
  auto g = make(2, 2, {-1, 0});  // y -> z
  auto a = f.source, b = f.target, c = g.target;
  auto hex = cat.compose(cat.tensor(cat.identity(c), cat.star(theta(converse(f)))),
                         cat.compose(cat.tensor(cat.symmetry(b, c), cat.identity(a)), cat.tensor(theta(g), cat.identity(a))));
  CHECK(equal(hex, compose(f, g)));
  CHECK(equal(hex, make(2, 2, {0, -1})));
}

TEST_CASE("trace formula") {
  CHECK(trace(make(2, 2, {0, -1})));
  CHECK_FALSE(trace(make(2, 2, {1, -1})));
  CHECK_FALSE(trace(make(2, 2, {-1, -1})));
  CHECK_THROWS_AS(trace(make(2, 3, {-1, -1})), ShapeError);
}

TEST_CASE("derive_trace examples") {
  Category cat;
  auto f = make(3, 3, {1, -1, -1});                                  // x -> y
  CHECK(core::derive_trace(cat, f, make(3, 3, {-1, 0, -1})));        // y -> x
  CHECK_FALSE(core::derive_trace(cat, f, make(3, 3, {-1, 2, -1})));  // y -> x'
  auto empty = make(2, 2, {-1, -1});
  CHECK_FALSE(core::derive_trace(cat, empty, empty));
  CHECK_THROWS_AS(core::derive_trace(cat, make(2, 2, {0, 1}), make(2, 2, {0, 1})), PreconditionError);
}

TEST_CASE("U-nuclear condition") {
  FinSet x = FinSet::range(2), u = FinSet::range(2), y = FinSet::range(4);
  PartialInjection f(product(x, u), y);
  f.map[0] = 0;  // (x0, u0)
  CHECK(is_u_nuclear(f, x, u));
  f.map[1] = 1;  // (x0, u1)
  CHECK_FALSE(is_u_nuclear(f, x, u));
  f.map[1] = -1;
  f.map[3] = 1;  // (x1, u1)
  CHECK(is_u_nuclear(f, x, u));
}

TEST_CASE("parametrized trace formula") {
  FinSet a = FinSet::range(1), b = FinSet::range(1), u = FinSet::range(2);
  PartialInjection same(product(a, u), product(b, u));
  same.map[0] = 0;  // (x,u0) -> (y,u0)
  CHECK(equal(param_trace(same, a, b, u), make(1, 1, {0})));
  PartialInjection cross(product(a, u), product(b, u));
  cross.map[0] = 1;  // (x,u0) -> (y,u1)
  CHECK_FALSE(param_trace(cross, a, b, u).defined(0));
  CHECK(param_trace(PartialInjection(product(a, u), product(b, u)), a, b, u).domain_size() == 0);
  PartialInjection two(product(a, u), product(FinSet::range(2), u));
  two.map[0] = 0;
  two.map[1] = 3;
  CHECK_THROWS_AS(param_trace(two, a, FinSet::range(2), u), PreconditionError);
}

TEST_CASE("factorization search") {
  Category cat;
  auto h2 = make(2, 2, {0, 1});
  auto none = core::find_nuclear_factorization(cat, h2, 3);
  CHECK_FALSE(none.fg.has_value());
  auto empty = core::find_nuclear_factorization(cat, make(2, 2, {-1, -1}), 3);
  REQUIRE(empty.fg.has_value());
  CHECK(equal(cat.compose(empty.fg->second, empty.fg->first), make(2, 2, {-1, -1})));
}

TEST_CASE("trace class equals the nuclear factorizable endomorphisms") {
  // Brute force over every middle object of size <= 3.
  Category cat;
  for (int n = 0; n <= 3; ++n) {
    auto a = FinSet::range(n);
    for (const auto& h : cat.morphisms(a, a)) {
      bool found = false;
      for (const auto& m : cat.objects_up_to(3)) {
        for (const auto& f : cat.morphisms(a, m)) {
          if (!is_nuclear(f)) continue;
          for (const auto& g : cat.morphisms(m, a)) {
            if (is_nuclear(g) && equal(compose(f, g), h)) found = true;
          }
        }
      }
      REQUIRE(found == cat.in_trace_class(h));
    }
  }
}

TEST_CASE("harness: tensored *-category and nuclear axioms at size three") {
  Category cat;
  core::RunConfig cfg;
  cfg.budget = 300;
  cfg.exhaustive_cap = 500000;
  CHECK(core::check_category_laws(cat, cfg).passed());
  CHECK(core::check_star_laws(cat, cfg).passed());
  auto nuc = core::check_nuclear_axioms(cat, cfg);
  CHECK(nuc.passed());
  CHECK(nuc.exhaustive);
  CHECK(core::check_sliding(cat, cfg).passed());
  auto tr = core::check_tracedness(cat, cfg);
  CHECK(tr.passed());
  CHECK(tr.exhaustive);
}

TEST_CASE("harness: trace ideal axioms exhaustive at size two") {
  Category cat;
  core::RunConfig cfg;
  cfg.size = 2;
  auto rep = core::check_trace_axioms(cat, cfg);
  CHECK(rep.passed());
  CHECK(rep.exhaustive);
}

TEST_CASE("harness: parametrized trace, laws that hold") {
  Category cat;
  core::RunConfig cfg;
  cfg.size = 2;
  cfg.exhaustive_cap = 2000000;
  cfg.max_witnesses = 1000000;
  auto rep = core::check_param_trace_axioms(cat, cfg);
  CHECK(rep.exhaustive);
  for (const auto& part : rep.parts) {
    if (part.law == "vanishing-iterated" || part.law == "sliding") continue;
    CHECK_MESSAGE(part.failed == 0, part.law);
  }
  // Every failure is a membership mismatch; the trace values never disagree.
  for (const auto& w : rep.failures) CHECK(w.detail.find("membership iff fails") == 0);
}

TEST_CASE("iterated vanishing: membership equivalence has a counterexample") {
  // A = {a}, B = {b, b'}, U = {u0, u1}, V = {v0, v1}
  // g(a,u0,v0) = (b,u0,v1), g(a,u1,v1) = (b',u1,v1)
  FinSet a = FinSet::range(1), b = FinSet::range(2), u = FinSet::range(2), v = FinSet::range(2);
  auto src = product(product(a, u), v), tgt = product(product(b, u), v);
  PartialInjection g(src, tgt);
  auto at = [](int x, int uu, int vv) { return (x * 2 + uu) * 2 + vv; };
  g.map[static_cast<std::size_t>(at(0, 0, 0))] = at(0, 0, 1);
  g.map[static_cast<std::size_t>(at(0, 1, 1))] = at(1, 1, 1);
  CHECK_FALSE(param_member(g, a, b, product(u, v)));
  REQUIRE(param_member(g, product(a, u), product(b, u), v));
  auto inner = param_trace(g, product(a, u), product(b, u), v);
  CHECK(param_member(inner, a, b, u));
}

TEST_CASE("sliding: membership equivalence has a counterexample") {
  // f(a,u0) = (b0,v), f(a,u1) = (b1,v); u = {v -> u0}
  FinSet a = FinSet::range(1), b = FinSet::range(2), u = FinSet::range(2), v = FinSet::range(1);
  PartialInjection f(product(a, u), product(b, v), {0, 1});
  PartialInjection sl(v, u, {0});
  auto left = compose(f, tensor(identity(b), sl));
  auto right = compose(tensor(identity(a), sl), f);
  CHECK_FALSE(param_member(left, a, b, u));
  CHECK(param_member(right, a, b, v));
}

TEST_CASE("a star that keeps the graph unchanged is caught") {
  struct DataStar : Category {
    Morphism star(const Morphism& f) const { return f.source.size() == f.target.size() ? f : converse(f); }
  };
  DataStar cat;
  core::RunConfig cfg;
  cfg.budget = 100;
  cfg.seed = 1;
  auto rep = core::check_star_laws(cat, cfg);
  CHECK_FALSE(rep.passed());
  REQUIRE_FALSE(rep.failures.empty());
  MESSAGE(rep.failures.front().law << ": " << rep.failures.front().detail);
}

TEST_CASE("trace-class membership does not slide") {
  Category cat;
  auto f = make(2, 3, {0, 1});       // 0 -> 0, 1 -> 1
  auto g = make(3, 2, {-1, 0, 1});   // 1 -> 0, 2 -> 1
  auto gf = compose(f, g), fg = compose(g, f);
  CHECK(equal(gf, make(2, 2, {-1, 0})));
  CHECK(equal(fg, make(3, 3, {-1, 0, 1})));
  CHECK(cat.in_trace_class(gf));
  CHECK_FALSE(cat.in_trace_class(fg));
  CHECK_FALSE(core::find_nuclear_factorization(cat, fg, 3).fg);

  auto finding = suites::pinj_sliding_membership_finding(3);
  CHECK(finding.reproduced);
  CHECK_FALSE(suites::pinj_sliding_membership_finding(2).reproduced);
}
