#include "doctest.h"

#include <Eigen/Eigenvalues>

#include "nucleal/core/harness.hpp"
#include "nucleal/finhilb.hpp"

using namespace nucleal;
using namespace nucleal::finhilb;
using M = CMatrix<double>;
using V = CVector<double>;
using cd = std::complex<double>;

namespace {

M hermitian(core::Lcg& rng, int n) {
  M a = random_matrix<double>(rng, n, n);
  return a + a.adjoint();
}

double dev(const M& a, const M& b) { return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("adjoint") {
  M i(1, 1);
  i(0, 0) = cd(0, 1);
  CHECK(adjoint(i)(0, 0) == cd(0, -1));
  core::Lcg rng(1);
  for (int k = 0; k < 50; ++k) {
    M f = random_matrix<double>(rng, 3, 3), g = random_matrix<double>(rng, 3, 3);
    CHECK(dev(adjoint<double>(f * g), adjoint(g) * adjoint(f)) <= 1e-12);
    CHECK(adjoint<double>(adjoint(f)) == f);
    V a = random_matrix<double>(rng, 3, 1), b = random_matrix<double>(rng, 3, 1);
    CHECK(std::abs(inner<double>(a, adjoint(f) * b) - inner<double>(f * a, b)) <= 1e-12);
  }
}

TEST_CASE("Hilbert-Schmidt inner product") {
  CHECK(hs_norm<double>(M::Identity(2, 2)) == doctest::Approx(std::sqrt(2.0)));
  M e11 = M::Zero(2, 2), e22 = M::Zero(2, 2);
  e11(0, 0) = 1;
  e22(1, 1) = 1;
  CHECK(hs_inner(e11, e11) == cd(1));
  CHECK(hs_inner(e11, e22) == cd(0));
  CHECK_THROWS_AS(hs_inner<double>(M::Zero(2, 2), M::Zero(2, 3)), ShapeError);
  core::Lcg rng(2);
  for (int k = 0; k < 50; ++k) {
    M f = random_matrix<double>(rng, 4, 4), g = random_matrix<double>(rng, 4, 4);
    CHECK(std::abs(hs_norm(f) * hs_norm(f) - trace<double>(f.adjoint() * f).real()) <= 1e-10);
    // trace(f g*) summed by hand
    cd t = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) t += f(i, j) * std::conj(g(i, j));
    }
    CHECK(std::abs(hs_inner(f, g) - t) <= 1e-10);
  }
}

TEST_CASE("the U map") {
  V v = V::Zero(4);
  v(0 * 2 + 1) = 1;  // e1 x e2
  M f = u_map<double>(v, 2, 2);
  M expect = M::Zero(2, 2);
  expect(1, 0) = 1;
  CHECK(f == expect);
  CHECK(u_map<double>(V::Zero(6), 2, 3).isZero());
  CHECK_THROWS_AS(u_map<double>(V::Zero(5), 2, 3), ShapeError);
  core::Lcg rng(3);
  for (int k = 0; k < 50; ++k) {
    int h = rng.range(1, 4), kk = rng.range(1, 4);
    V a = random_matrix<double>(rng, h * kk, 1), b = random_matrix<double>(rng, h * kk, 1);
    CHECK((u_inverse(u_map<double>(a, h, kk)) - a).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(hs_inner(u_map<double>(a, h, kk), u_map<double>(b, h, kk)) - inner<double>(a, b)) <= 1e-10);
  }
}

TEST_CASE("Hermitian eigensolver") {
  M d = M::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 1;
  auto es = hermitian_eig(d);
  CHECK(es.values(0) == doctest::Approx(1));
  CHECK(es.values(1) == doctest::Approx(2));
  CHECK(dev(es.vectors.cwiseAbs().cast<cd>(), (M(2, 2) << 0, 1, 1, 0).finished()) <= 1e-12);
  M a(2, 2);
  a << 2, 1, 1, 2;
  es = hermitian_eig(a);
  CHECK(es.values(0) == doctest::Approx(1));
  CHECK(es.values(1) == doctest::Approx(3));
  M bad = M::Zero(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(hermitian_eig(bad), PreconditionError);
  core::Lcg rng(4);
  for (int k = 0; k < 30; ++k) {
    M h = hermitian(rng, 6);
    es = hermitian_eig(h);
    CHECK(dev(es.vectors * es.values.cast<cd>().asDiagonal() * es.vectors.adjoint(), h) <= 1e-10);
    CHECK(dev(es.vectors.adjoint() * es.vectors, M::Identity(6, 6)) <= 1e-10);
    for (int i = 0; i + 1 < 6; ++i) CHECK(es.values(i) <= es.values(i + 1));
    Eigen::SelfAdjointEigenSolver<M> ref(h);
    CHECK((ref.eigenvalues() - es.values).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("positive square roots and absolute values") {
  M d = M::Zero(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  M r = positive_sqrt(d);
  CHECK(std::abs(r(0, 0) - cd(2)) <= 1e-12);
  CHECK(std::abs(r(1, 1) - cd(3)) <= 1e-12);
  M a(2, 2);
  a << 2, 1, 1, 2;
  CHECK(dev(positive_sqrt(a) * positive_sqrt(a), a) <= 1e-9);
  M neg = M::Zero(1, 1);
  neg(0, 0) = -1;
  CHECK_THROWS_AS(positive_sqrt(neg), PreconditionError);
  core::Lcg rng(5);
  for (int n = 1; n <= 6; ++n) {
    M u = random_unitary<double>(rng, n);
    CHECK(dev(abs_op(u), M::Identity(n, n)) <= 1e-9);
    M g = random_matrix<double>(rng, n, n);
    M p = g.adjoint() * g;
    M s = positive_sqrt(p);
    CHECK(dev(s * s, p) <= 1e-9);
    CHECK(hermitian_eig(s).values.minCoeff() >= -1e-9);
  }
}

TEST_CASE("trace and trace norm") {
  M a(2, 2);
  a << 1, 2, 3, 4;
  CHECK(trace(a) == cd(5));
  M d = M::Zero(2, 2);
  d(0, 0) = -3;
  d(1, 1) = 4;
  CHECK(trace_norm(d) == doctest::Approx(7));
  CHECK_THROWS_AS(trace<double>(M::Zero(2, 3)), ShapeError);
  core::Lcg rng(6);
  for (int k = 0; k < 50; ++k) {
    M x = random_matrix<double>(rng, 5, 5), y = random_matrix<double>(rng, 5, 5);
    CHECK(std::abs(trace<double>(x * y) - trace<double>(y * x)) <= 1e-10);
    M f = random_matrix<double>(rng, 2, 2), g = random_matrix<double>(rng, 3, 3);
    CHECK(std::abs(trace<double>(tensor(f, g)) - trace(f) * trace(g)) <= 1e-10);
    CHECK(dev(adjoint<double>(tensor(f, g)), tensor<double>(adjoint(f), adjoint(g))) <= 1e-12);
  }
}

TEST_CASE("factorization through the polar decomposition") {
  Category cat;
  auto [f, g] = hs_factorize<double>(M::Identity(2, 2));
  CHECK(dev(f, M::Identity(2, 2)) <= 1e-12);
  CHECK(dev(g, M::Identity(2, 2)) <= 1e-12);
  auto [f0, g0] = hs_factorize<double>(M::Zero(3, 3));
  CHECK(f0.isZero());
  CHECK(g0.isZero());
  core::Lcg rng(7);
  for (int k = 0; k < 50; ++k) {
    M h = random_matrix<double>(rng, 4, 4);
    auto [ff, gg] = hs_factorize(h);
    CHECK(dev(gg * ff, h) <= 1e-9);
    CHECK(std::abs(core::derive_trace(cat, ff, gg) - trace(h)) <= 1e-8);
  }
  // Rank one: the kernel of |h| is completed by the identity.
  M rank1 = random_matrix<double>(rng, 3, 1) * random_matrix<double>(rng, 1, 3);
  auto [w, mod] = polar(rank1);
  CHECK(dev(w * mod, rank1) <= 1e-9);
}

TEST_CASE("derive_trace on scaled identities") {
  Category cat;
  M half = M::Identity(2, 2) / std::sqrt(2.0);
  CHECK(std::abs(core::derive_trace(cat, half, half) - cd(1)) <= 1e-12);
}

TEST_CASE("harness checks") {
  Category cat;
  core::RunConfig cfg;
  cfg.budget = 200;
  cfg.size = 3;
  CHECK(core::check_category_laws(cat, cfg).passed());
  CHECK(core::check_star_laws(cat, cfg).passed());
  Category loose(1e-9);
  cfg.size = 4;
  CHECK(core::check_nuclear_axioms(loose, cfg).passed());
  CHECK(core::check_sliding(cat, cfg).passed());
  CHECK(core::check_tracedness(cat, cfg).passed());
  CHECK(core::check_trace_axioms(cat, cfg).passed());
}
