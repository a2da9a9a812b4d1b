#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nucleal/core/error.hpp"
#include "nucleal/core/rng.hpp"

/// Distribution kernels sampled on uniform grids, composed by Simpson
/// quadrature.
namespace nucleal::drelnum {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// [lower, upper] with n uniform nodes; n odd and at least 3.
struct Interval {
  double lower = 0;
  double upper = 1;
  int n = 3;

  Interval() = default;
  Interval(double lo, double hi, int nodes);

  [[nodiscard]] double step() const { return (upper - lower) / (n - 1); }
  [[nodiscard]] double node(int i) const { return lower + i * step(); }
  [[nodiscard]] Vector nodes() const;
  /// Composite Simpson weights h/3 (1, 4, 2, ..., 4, 1).
  [[nodiscard]] Vector weights() const;
  [[nodiscard]] Interval refined() const { return {lower, upper, 2 * n - 1}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Product of intervals; the empty product is the one-point unit.
struct Domain {
  std::vector<Interval> factors;

  [[nodiscard]] int size() const;
  [[nodiscard]] Vector weights() const;
  /// Coordinates of node k, one per factor; the last factor varies fastest.
  [[nodiscard]] std::vector<double> point(int k) const;
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

Domain single(const Interval& i);
Domain tensor(const Domain& a, const Domain& b);

/// Composite Simpson approximation of the integral of sampled values.
double quad(const Vector& values, const Interval& iv);
double quad(const Vector& values, const Domain& d);

/// beta(x_i, y_j) with rows over source nodes. `smooth` marks kernels
/// sampled from a function; the discrete Dirac kernels of identities and
/// symmetries are not.
struct GridKernel {
  Domain source;
  Domain target;
  Matrix samples;
  bool smooth = true;

  GridKernel() = default;
  GridKernel(Domain s, Domain t, Matrix m, bool is_smooth = true);  // validates
  /// Largest boundary sample relative to the largest sample, for
  /// single-interval kernels; 0 when not applicable.
  [[nodiscard]] double boundary_ratio() const;
  [[nodiscard]] std::string describe() const;
};

/// f_L(phi)(y) = integral of beta(x, y) phi(x) dx.
Vector apply_left(const GridKernel& k, const Vector& phi);
/// f_R(psi)(x) = integral of beta(x, y) psi(y) dy.
Vector apply_right(const GridKernel& k, const Vector& psi);

/// f then g: alpha(x, z) = integral over y of beta_f(x, y) beta_g(y, z).
GridKernel compose(const GridKernel& f, const GridKernel& g);
/// Discrete Dirac delta: 1 / w on the diagonal.
GridKernel identity(const Domain& d);
GridKernel tensor(const GridKernel& f, const GridKernel& g);
GridKernel symmetry(const Domain& a, const Domain& b);
GridKernel transpose(const GridKernel& f);
/// Entrywise, relative to the larger magnitude.
bool approx_equal(const GridKernel& f, const GridKernel& g, double tol);

/// Integral of alpha(x, x).
double trace(const GridKernel& h);

/// Fixture kernel exp(-((x - x0)^2 + (y - y0)^2) / s^2) times a smooth
/// bump vanishing at both interval ends.
struct GaussianBump {
  std::string name;
  double x0 = 0;
  double y0 = 0;
  double s = 1;
};

/// exp(1 - 1 / (1 - u^2)) for u in (-1, 1) rescaled to the interval, else 0.
double window(double t, const Interval& iv);
GridKernel gaussian_kernel(const Interval& src, const Interval& tgt, const GaussianBump& g);
/// A smooth test function on the interval.
Vector test_function(const Interval& iv, double center, double width);

/// Heat kernel of width eps, the natural smooth stand-in for the identity.
GridKernel heat_kernel(const Interval& iv, double eps);

/// Random smooth kernel made of a few Gaussian bumps over all coordinates.
GridKernel random_smooth(core::Lcg& rng, const Domain& a, const Domain& b);

/// Kernels on small grids.
class Category {
 public:
  using Object = Domain;
  using Morphism = GridKernel;
  using Scalar = double;

  explicit Category(double tol = 1e-6) : tol_(tol) {}

  double tolerance() const { return tol_; }
  std::string name() const { return "drelnum"; }
  Object unit() const { return {}; }
  Object tensor(const Object& a, const Object& b) const { return drelnum::tensor(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return drelnum::tensor(f, g); }
  Object conj(const Object& a) const { return a; }
  Morphism conj(const Morphism& f) const { return f; }
  bool same(const Object& a, const Object& b) const { return a == b; }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return drelnum::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return drelnum::compose(f, g); }
  Morphism symmetry(const Object& a, const Object& b) const { return drelnum::symmetry(a, b); }
  Morphism star(const Morphism& f) const { return transpose(f); }
  Morphism iota() const { return identity(unit()); }
  Morphism iota_inv() const { return identity(unit()); }
  bool equal(const Morphism& f, const Morphism& g) const { return approx_equal(f, g, tol_); }
  std::string describe(const Morphism& f) const { return f.describe(); }
  std::string describe(const Object& a) const { return a.describe(); }
  Scalar to_scalar(const Morphism& f) const;
  bool scalar_equal(double a, double b) const;
  Scalar scalar_star(double a) const { return a; }
  Scalar scalar_mul(double a, double b) const { return a * b; }
  std::string describe_scalar(double a) const;

  /// At most one interval factor with 3 or 5 nodes, keeping tensor
  /// powers small.
  Object sample_object(core::Lcg& rng, int max_size) const;
  /// A smooth kernel, or on endomorphisms sometimes a Dirac part plus a
  /// smooth one.
  Morphism sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const;
  Morphism sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const { return random_smooth(rng, a, b); }
  /// Conjugates a random rotation by the square roots of the weights.
  std::tuple<Object, Morphism, Morphism> sample_iso(core::Lcg& rng, const Object& b) const;

  bool is_nuclear(const Morphism& f) const { return f.smooth; }
  Morphism theta(const Morphism& f) const;
  Morphism theta_inv(const Morphism& m, const Object& a, const Object& b) const;
  std::optional<std::pair<Morphism, Morphism>> factorize(const Morphism& h) const;

  bool in_trace_class(const Morphism& f) const { return f.smooth && f.source == f.target; }
  Scalar trace(const Morphism& f) const { return drelnum::trace(f); }
  Morphism sample_trace_class(core::Lcg& rng, const Object& a) const { return random_smooth(rng, a, a); }

 private:
  double tol_;
};

}  // namespace nucleal::drelnum
