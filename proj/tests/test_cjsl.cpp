#include "doctest.h"

#include <algorithm>
#include <chrono>

#include "nucleal/cjsl.hpp"
#include "nucleal/core/error.hpp"

using namespace nucleal;
using namespace nucleal::cjsl;

namespace {

LatticePtr ptr(FinLattice l) { return std::make_shared<const FinLattice>(std::move(l)); }

// Every function between the carriers that preserves bottom and joins.
std::vector<std::vector<int>> brute_sup_maps(const FinLattice& a, const FinLattice& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(a.size()), 0);
  while (true) {
    if (sup_violation(a, b, v).empty()) out.push_back(v);
    std::size_t k = 0;
    for (; k < v.size(); ++k) {
      if (++v[k] < b.size()) break;
      v[k] = 0;
    }
    if (k == v.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(FinLattice({{true, true}, {true, true}}), InvariantError);  // not antisymmetric
  CHECK_THROWS_AS(FinLattice({{true, false}, {false, true}}), InvariantError);  // no join
  auto l = m3();
  CHECK(l.size() == 5);
  CHECK(l.join(1, 2) == l.top());
  CHECK(l.meet(1, 2) == l.bottom());
  CHECK(l.join_irreducibles() == std::vector<int>{1, 2, 3});
  CHECK(chain(4).join_irreducibles().size() == 3);
}

TEST_CASE("lattice counts up to isomorphism") {
  const std::vector<std::size_t> expect{1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) CHECK(lattices_of_size(n).size() == expect[static_cast<std::size_t>(n - 1)]);
  CHECK(lattices_up_to(5).size() == 10);
}

TEST_CASE("distributivity") {
  for (int n = 1; n <= 6; ++n) CHECK(is_distributive(chain(n)));
  CHECK_FALSE(is_distributive(m3()));
  CHECK_FALSE(is_distributive(n5()));
  int failures = 0;
  for (const auto& l : lattices_up_to(5)) {
    if (!is_distributive(l)) {
      ++failures;
      CHECK((l.name() == "M3" || l.name() == "N5"));
    }
  }
  CHECK(failures == 2);
}

TEST_CASE("sup-map enumeration agrees with brute force") {
  auto ls = lattices_up_to(4);
  ls.push_back(m3());
  ls.push_back(n5());
  for (const auto& a : ls) {
    for (const auto& b : ls) {
      if (a.size() * b.size() > 20) continue;
      auto pa = ptr(a), pb = ptr(b);
      std::vector<std::vector<int>> got;
      for (const auto& f : all_sup_maps(pa, pb)) got.push_back(f.values);
      auto want = brute_sup_maps(a, b);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      REQUIRE(got == want);
    }
  }
  CHECK_THROWS_AS(SupMap(ptr(chain(2)), ptr(chain(2)), {1, 1}), InvariantError);
}

TEST_CASE("Higgs-Rowe formula on the two-element chain") {
  auto c2 = ptr(chain(2));
  auto from_bottom = hr_apply(constant_bottom(c2, c2));
  CHECK(from_bottom.values == identity(c2).values);
  CHECK(hr_apply(identity(c2)).values == std::vector<int>{0, 0});
  auto top = SupMap(c2, c2, {0, 1});
  CHECK(hr_apply(top).values == std::vector<int>{0, 0});
}

TEST_CASE("Higgs-Rowe formula with g constantly top") {
  for (const auto& l : lattices_up_to(5)) {
    auto p = ptr(l);
    // The map sending everything above bottom to top is a sup-map.
    std::vector<int> v(static_cast<std::size_t>(l.size()), l.top());
    v[static_cast<std::size_t>(l.bottom())] = l.bottom();
    if (l.size() == 1) continue;
    auto r = hr_apply(SupMap(p, p, v));
    // Only b = bottom can escape a <= g(b), and sup{bottom} = bottom.
    for (int a = 0; a < l.size(); ++a) {
      CHECK((r.values[static_cast<std::size_t>(a)] == l.bottom() || !l.leq(a, l.bottom())));
    }
  }
}

TEST_CASE("nuclear identities are exactly the distributive lattices") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& l : lattices_up_to(6)) {
    auto p = ptr(l);
    auto w = is_nuclear_morphism(identity(p));
    CHECK_FALSE(w.inconclusive);
    CHECK_MESSAGE(w.nuclear == is_distributive(l), l.name());
    if (w.nuclear) CHECK(hr_apply(*w.witness).values == identity(p).values);
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 30.0);
  auto c2 = ptr(chain(2));
  auto w = is_nuclear_morphism(identity(c2));
  REQUIRE(w.witness);
  CHECK(w.witness->values == constant_bottom(c2, c2).values);
  CHECK_FALSE(is_nuclear_morphism(identity(ptr(m3()))).nuclear);
  auto big = ptr(chain(7));
  CHECK(is_nuclear_morphism(identity(big)).inconclusive);
}

TEST_CASE("constant bottom is nuclear") {
  for (const auto& l : lattices_up_to(5)) {
    auto p = ptr(l);
    auto w = is_nuclear_morphism(constant_bottom(p, p));
    CHECK(w.nuclear);
  }
}

TEST_CASE("right adjoints") {
  for (const auto& l : lattices_up_to(5)) {
    auto p = ptr(l);
    auto id = right_adjoint(identity(p));
    CHECK(id.values == identity(p).values);
    auto cb = right_adjoint(constant_bottom(p, p));
    for (int v : cb.values) CHECK(v == l.top());
  }
  auto ls = lattices_up_to(5);
  for (const auto& a : ls) {
    for (const auto& b : ls) {
      auto pa = ptr(a), pb = ptr(b);
      for (const auto& f : all_sup_maps(pa, pb)) {
        auto g = right_adjoint(f);
        for (int x = 0; x < a.size(); ++x) {
          for (int y = 0; y < b.size(); ++y) REQUIRE(b.leq(f(x), y) == a.leq(x, g(y)));
        }
      }
    }
  }
}

TEST_CASE("closure lemma") {
  auto r = check_closure_lemma(4);
  CHECK(r.passed());
  CHECK(r.cases > 0);
  CHECK(r.exhaustive);
  auto c2 = ptr(chain(2));
  for (const auto& l : lattices_up_to(4)) {
    for (const auto& g : all_sup_maps(c2, ptr(l))) CHECK(is_nuclear_morphism(compose(identity(c2), g)).nuclear);
  }
}

TEST_CASE("Higgs-Rowe output preservation is recorded") {
  auto rows = hr_preservation(lattices_up_to(5));
  CHECK(rows.size() == 10);
  for (const auto& r : rows) {
    CHECK(r.maps > 0);
    MESSAGE(r.lattice << ": " << r.non_sup << " of " << r.maps << " images fail the sup-map law");
  }
}
