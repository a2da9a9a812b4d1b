#include "doctest.h"

#include <set>

#include "nucleal/core/harness.hpp"
#include "nucleal/finrel.hpp"

using namespace nucleal;

namespace {

// Composition forgets every pair once the source has three points, so the
// identity laws break there and nowhere else.
struct LossyRel : finrel::Category {
  Morphism compose(const Morphism& g, const Morphism& f) const {
    auto out = finrel::Category::compose(g, f);
    if (out.source.size() == 3) return finrel::Relation(out.source, out.target);
    return out;
  }
};

std::uint64_t step(std::uint64_t x) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(x) * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint64_t>(wide & ~std::uint64_t{0});
}

}  // namespace

TEST_CASE("Lcg follows the fixed recurrence") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xffffffffffffffffULL}) {
    core::Lcg rng(seed);
    std::uint64_t x = seed;
    for (int k = 0; k < 100; ++k) {
      x = step(x);
      REQUIRE(rng.next() == x);
    }
  }
  CHECK(core::Lcg(0).next() == 1442695040888963407ULL);
}

TEST_CASE("Lcg ranges") {
  core::Lcg rng(7);
  std::set<int> seen;
  for (int k = 0; k < 2000; ++k) {
    const int r = rng.range(-2, 3);
    CHECK(r >= -2);
    CHECK(r <= 3);
    seen.insert(r);
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(5) < 5);
  }
  CHECK(seen.size() == 6);
  CHECK(rng.below(0) == 0);
}

TEST_CASE("fnv1a and substreams") {
  CHECK(core::fnv1a("") == 14695981039346656037ULL);
  CHECK(core::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(core::fnv1a("foobar") == 0x85944171f73967e8ULL);
  auto a = core::substream(1, "x"), b = core::substream(1, "x"), c = core::substream(1, "y");
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
}

TEST_CASE("harness finds broken identity laws and caps witnesses") {
  LossyRel cat;
  core::RunConfig cfg;
  cfg.max_witnesses = 3;
  auto r = core::check_category_laws(cat, cfg);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() == 3);
  CHECK(r.failed_cases > 3);
  bool identity_failed = false;
  for (const auto& p : r.parts) {
    if (p.law == "identity") identity_failed = p.failed > 0;
  }
  CHECK(identity_failed);
  for (const auto& w : r.failures) CHECK_FALSE(w.detail.empty());

  cfg.size = 2;
  CHECK(core::check_category_laws(cat, cfg).passed());
}

TEST_CASE("exhaustive and sampled coverage") {
  finrel::Category cat;
  core::RunConfig cfg;
  cfg.size = 2;
  cfg.exhaustive_cap = 1000000;
  auto full = core::check_star_laws(cat, cfg);
  CHECK(full.passed());
  CHECK(full.coverage() == "exhaustive<=2");
  for (const auto& p : full.parts) {
    CHECK(p.fully_exhaustive);
    CHECK(p.sampled == 0);
  }

  cfg.allow_exhaustive = false;
  cfg.budget = 50;
  auto samp = core::check_star_laws(cat, cfg);
  CHECK(samp.passed());
  CHECK_FALSE(samp.exhaustive);
  for (const auto& p : samp.parts) {
    CHECK_FALSE(p.fully_exhaustive);
    CHECK(p.sampled == 50);
  }
}

TEST_CASE("seeded runs repeat") {
  LossyRel cat;
  core::RunConfig cfg;
  cfg.allow_exhaustive = false;
  cfg.budget = 100;
  auto a = core::check_category_laws(cat, cfg), b = core::check_category_laws(cat, cfg);
  CHECK(a.failed_cases == b.failed_cases);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].detail == b.failures[i].detail);
  cfg.seed = 2;
  auto c = core::check_category_laws(cat, cfg);
  bool differs = c.failed_cases != a.failed_cases;
  for (std::size_t i = 0; !differs && i < std::min(a.failures.size(), c.failures.size()); ++i) {
    differs = a.failures[i].detail != c.failures[i].detail;
  }
  CHECK(differs);
}

TEST_CASE("coverage strings") {
  core::AxiomReport r;
  CHECK(r.coverage() == "no cases");
  core::LawStats a{"a"};
  a.cases = 10;
  a.exhaustive_size = 3;
  a.fully_exhaustive = true;
  core::LawStats b{"b"};
  b.cases = 210;
  b.exhaustive_size = 1;
  b.sampled = 200;
  core::LawStats c{"c"};
  c.cases = 4;
  r.parts = {a};
  CHECK(r.coverage() == "exhaustive<=3");
  r.parts = {a, b};
  CHECK(r.coverage() == "exhaustive<=1 +200 sampled");
  r.parts = {a, c};
  CHECK(r.coverage() == "exhaustive<=3 +4 fixed");
}
