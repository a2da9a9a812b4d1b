#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nucleal/core/error.hpp"
#include "nucleal/core/rng.hpp"
#include "nucleal/finset.hpp"
#include "nucleal/rational.hpp"

/// Finite probability spaces and joint measures, with exact arithmetic.
namespace nucleal::finstoch {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Point masses summing to one; zero-mass points are allowed.
struct ProbSpace {
  FinSet points;
  RVector mass;

  ProbSpace() = default;
  ProbSpace(FinSet pts, RVector m);
  static ProbSpace uniform(int n);
  static ProbSpace point();

  [[nodiscard]] int size() const { return points.size(); }
  [[nodiscard]] std::string describe() const;
};

bool same_space(const ProbSpace& a, const ProbSpace& b);
ProbSpace product(const ProbSpace& a, const ProbSpace& b);

/// A finite measure on X x Y whose marginals vanish at null points.
struct JointMeasure {
  ProbSpace source;
  ProbSpace target;
  RMatrix weight;  // rows: source points

  JointMeasure() = default;
  JointMeasure(ProbSpace s, ProbSpace t, RMatrix w);  // validates
  [[nodiscard]] std::string describe() const;
};

/// Row-stochastic matrix.
struct StochKernel {
  RMatrix rows;

  StochKernel() = default;
  explicit StochKernel(RMatrix r);  // validates
};

std::pair<RVector, RVector> marginals(const JointMeasure& a);

/// Conditional kernels Q1 : X -> Y and Q2 : Y -> X. A row over a point of
/// zero marginal is the point mass at the first target point.
std::pair<StochKernel, StochKernel> disintegrate(const JointMeasure& a);

/// h(x) = a_X(x) / mu(x), zero where mu(x) = 0.
RVector rn_derivative(const JointMeasure& a);
/// F(x, y) = weight(x, y) / mu(x), zero rows where mu(x) = 0.
RMatrix associated_kernel(const JointMeasure& a);

/// Kleisli composition of kernels: first then second.
StochKernel compose(const StochKernel& first, const StochKernel& second);
StochKernel identity_kernel(int n);

/// a then b: gamma(x, z) = sum over y with nu(y) > 0 of a(x, y) b(y, z) / nu(y).
JointMeasure compose(const JointMeasure& a, const JointMeasure& b);
/// Delta(x, x') = mu(x) when x = x'.
JointMeasure identity(const ProbSpace& x);
JointMeasure product_measure(const ProbSpace& x, const ProbSpace& y);
JointMeasure transpose(const JointMeasure& a);
JointMeasure tensor(const JointMeasure& a, const JointMeasure& b);
JointMeasure symmetry(const ProbSpace& x, const ProbSpace& y);
bool equal(const JointMeasure& a, const JointMeasure& b);

/// Total mass exactly one.
bool is_probability(const JointMeasure& a);
/// Marginals equal the object measures.
bool is_coupling(const JointMeasure& a);

struct IsoWitness {
  bool equivalent = false;
  std::optional<JointMeasure> h;  // (X, mu) -> (X, nu)
  std::optional<JointMeasure> k;  // (X, nu) -> (X, mu)
};

/// Mutual absolute continuity, with H(A x B) = mu(A n B) and its partner
/// checked to compose to the identities on both sides.
IsoWitness iso_equivalent(const ProbSpace& p, const ProbSpace& q);

/// weight(x, y) = 0 whenever mu(x) nu(y) = 0.
bool is_nuclear(const JointMeasure& a);
/// f(x, y) = weight(x, y) / (mu(x) nu(y)), zero on null cells.
RMatrix density(const JointMeasure& a);
/// The weight matrix retyped as a measure I -> X x Y.
JointMeasure theta(const JointMeasure& a);
JointMeasure theta_inv(const JointMeasure& m, const ProbSpace& x, const ProbSpace& y);
JointMeasure from_density(const RMatrix& f, const ProbSpace& x, const ProbSpace& y);

/// d(x, z) = sum_y f(x, y) g(y, z) nu(y).
RMatrix nuclear_compose_density(const RMatrix& f, const RMatrix& g, const RVector& nu);

/// sum_x density(h)(x, x) mu(x).
Rational trace_nuclear(const JointMeasure& h);

ProbSpace random_space(core::Lcg& rng, int n, bool allow_null = true);
JointMeasure random_measure(core::Lcg& rng, const ProbSpace& x, const ProbSpace& y);
/// A measure with marginals exactly mu and nu.
JointMeasure random_coupling(core::Lcg& rng, const ProbSpace& x, const ProbSpace& y);

/// Finitely supported distribution; zero masses are dropped.
template <class P>
using FinDist = std::map<P, Rational>;

template <class P>
void require_distribution(const FinDist<P>& d) {
  Rational total = 0;
  for (const auto& [p, m] : d) {
    if (m.sign() < 0) throw InvariantError("negative mass in distribution");
    total += m;
  }
  if (total != Rational(1)) throw InvariantError("distribution masses sum to " + total.str());
}

template <class P>
FinDist<P> normalized(FinDist<P> d) {
  std::erase_if(d, [](const auto& kv) { return kv.second.is_zero(); });
  return d;
}

/// eta(x)(B) = chi_B(x).
template <class P>
FinDist<P> giry_unit(const P& x) {
  return {{x, Rational(1)}};
}

/// T(f)(p)(B') = p(f^-1 B').
template <class P, class F>
auto giry_map(F&& f, const FinDist<P>& p) {
  using Q = std::decay_t<std::invoke_result_t<F, const P&>>;
  require_distribution(p);
  FinDist<Q> out;
  for (const auto& [x, m] : p) out[f(x)] += m;
  return normalized(std::move(out));
}

/// mu(pp)(B) = integral of e_B over pp.
template <class P>
FinDist<P> giry_mult(const FinDist<FinDist<P>>& pp) {
  require_distribution(pp);
  FinDist<P> out;
  for (const auto& [p, w] : pp) {
    require_distribution(p);
    for (const auto& [x, m] : p) out[x] += w * m;
  }
  return normalized(std::move(out));
}

/// Joint measures between finite probability spaces.
class Category {
 public:
  using Object = ProbSpace;
  using Morphism = JointMeasure;
  using Scalar = Rational;

  std::string name() const { return "finstoch"; }
  Object unit() const { return ProbSpace::point(); }
  Object tensor(const Object& a, const Object& b) const { return product(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return finstoch::tensor(f, g); }
  Object conj(const Object& a) const { return a; }
  Morphism conj(const Morphism& f) const { return f; }
  bool same(const Object& a, const Object& b) const { return same_space(a, b); }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return finstoch::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return finstoch::compose(f, g); }
  Morphism symmetry(const Object& a, const Object& b) const { return finstoch::symmetry(a, b); }
  Morphism star(const Morphism& f) const { return transpose(f); }
  Morphism iota() const { return identity(unit()); }
  Morphism iota_inv() const { return identity(unit()); }
  bool equal(const Morphism& f, const Morphism& g) const { return finstoch::equal(f, g); }
  std::string describe(const Morphism& f) const { return f.describe(); }
  std::string describe(const Object& a) const { return a.describe(); }
  Scalar to_scalar(const Morphism& f) const;
  bool scalar_equal(const Scalar& a, const Scalar& b) const { return a == b; }
  Scalar scalar_star(const Scalar& a) const { return a; }
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const { return a * b; }
  std::string describe_scalar(const Scalar& a) const { return a.str(); }

  Object sample_object(core::Lcg& rng, int max_size) const;
  Morphism sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const {
    return random_measure(rng, a, b);
  }
  Morphism sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const {
    return random_measure(rng, a, b);
  }
  /// Same points, a fresh measure with the same null sets.
  std::tuple<Object, Morphism, Morphism> sample_iso(core::Lcg& rng, const Object& b) const;

  bool is_nuclear(const Morphism& f) const { return finstoch::is_nuclear(f); }
  Morphism theta(const Morphism& f) const { return finstoch::theta(f); }
  Morphism theta_inv(const Morphism& m, const Object& a, const Object& b) const {
    return finstoch::theta_inv(m, a, b);
  }
  /// h = Delta after h.
  std::optional<std::pair<Morphism, Morphism>> factorize(const Morphism& h) const {
    return std::make_pair(h, identity(h.target));
  }

  bool in_trace_class(const Morphism& f) const { return same_space(f.source, f.target); }
  Scalar trace(const Morphism& f) const { return trace_nuclear(f); }
  Morphism sample_trace_class(core::Lcg& rng, const Object& a) const { return random_measure(rng, a, a); }
};

}  // namespace nucleal::finstoch
