#include "nucleal/drelnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace nucleal::drelnum {

Interval::Interval(double lo, double hi, int nodes) : lower(lo), upper(hi), n(nodes) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvariantError("interval needs lower < upper");
  if (n < 3 || n % 2 == 0) throw InvariantError("Simpson grids need an odd node count of at least 3");
}

Vector Interval::nodes() const {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = node(i);
  return v;
}

Vector Interval::weights() const {
  Vector w(n);
  const double h = step() / 3.0;
  for (int i = 0; i < n; ++i) w(i) = h * ((i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0));
  return w;
}

int Domain::size() const {
  int s = 1;
  for (const auto& f : factors) s *= f.n;
  return s;
}

Vector Domain::weights() const {
  Vector w = Vector::Ones(1);
  for (const auto& f : factors) {
    Vector next = Eigen::kroneckerProduct(w, f.weights());
    w = next;
  }
  return w;
}

std::vector<double> Domain::point(int k) const {
  std::vector<double> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    out[i] = factors[i].node(k % factors[i].n);
    k /= factors[i].n;
  }
  return out;
}

std::string Domain::describe() const {
  if (factors.empty()) return "I";
  std::string s;
  char buf[96];
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s[%g,%g;%d]", i ? "x" : "", factors[i].lower, factors[i].upper, factors[i].n);
    s += buf;
  }
  return s;
}

Domain single(const Interval& i) { return Domain{{i}}; }

Domain tensor(const Domain& a, const Domain& b) {
  Domain d = a;
  d.factors.insert(d.factors.end(), b.factors.begin(), b.factors.end());
  return d;
}

double quad(const Vector& values, const Interval& iv) {
  if (values.size() != iv.n) throw ShapeError("sample count does not match the grid");
  return values.dot(iv.weights());
}

double quad(const Vector& values, const Domain& d) {
  if (values.size() != d.size()) throw ShapeError("sample count does not match the grid");
  return values.dot(d.weights());
}

GridKernel::GridKernel(Domain s, Domain t, Matrix m, bool is_smooth)
    : source(std::move(s)), target(std::move(t)), samples(std::move(m)), smooth(is_smooth) {
  if (samples.rows() != source.size() || samples.cols() != target.size()) {
    throw InvariantError("kernel samples do not match the grids");
  }
  if (!samples.allFinite()) throw InvariantError("kernel has non-finite samples");
}

double GridKernel::boundary_ratio() const {
  if (source.factors.size() != 1 || target.factors.size() != 1 || samples.size() == 0) return 0;
  const double peak = samples.cwiseAbs().maxCoeff();
  if (peak == 0) return 0;
  const auto r = samples.rows() - 1, c = samples.cols() - 1;
  double edge = std::max({samples.row(0).cwiseAbs().maxCoeff(), samples.row(r).cwiseAbs().maxCoeff(),
                          samples.col(0).cwiseAbs().maxCoeff(), samples.col(c).cwiseAbs().maxCoeff()});
  return edge / peak;
}

std::string GridKernel::describe() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s %dx%d |max| %.6g", smooth ? "smooth" : "dirac", static_cast<int>(samples.rows()),
                static_cast<int>(samples.cols()), samples.size() ? samples.cwiseAbs().maxCoeff() : 0.0);
  return source.describe() + "->" + target.describe() + " " + buf;
}

Vector apply_left(const GridKernel& k, const Vector& phi) {
  if (phi.size() != k.source.size()) throw ShapeError("test function does not match the source grid");
  return k.samples.transpose() * k.source.weights().cwiseProduct(phi);
}

Vector apply_right(const GridKernel& k, const Vector& psi) {
  if (psi.size() != k.target.size()) throw ShapeError("test function does not match the target grid");
  return k.samples * k.target.weights().cwiseProduct(psi);
}

GridKernel compose(const GridKernel& f, const GridKernel& g) {
  if (!(f.target == g.source)) throw ShapeError("cannot compose: " + f.target.describe() + " vs " + g.source.describe());
  Matrix a = f.samples * f.target.weights().asDiagonal() * g.samples;
  return {f.source, g.target, std::move(a), f.smooth || g.smooth};
}

GridKernel identity(const Domain& d) {
  Matrix m = d.weights().cwiseInverse().asDiagonal();
  return {d, d, std::move(m), d.factors.empty()};
}

GridKernel tensor(const GridKernel& f, const GridKernel& g) {
  Matrix m = Eigen::kroneckerProduct(f.samples, g.samples);
  return {tensor(f.source, g.source), tensor(f.target, g.target), std::move(m), f.smooth && g.smooth};
}

GridKernel symmetry(const Domain& a, const Domain& b) {
  auto src = tensor(a, b), tgt = tensor(b, a);
  const int na = a.size(), nb = b.size();
  Vector w = src.weights();
  Matrix m = Matrix::Zero(src.size(), tgt.size());
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) m(x * nb + y, y * na + x) = 1.0 / w(x * nb + y);
  }
  return {src, tgt, std::move(m), src.factors.empty()};
}

GridKernel transpose(const GridKernel& f) { return {f.target, f.source, f.samples.transpose(), f.smooth}; }

bool approx_equal(const GridKernel& f, const GridKernel& g, double tol) {
  if (!(f.source == g.source) || !(f.target == g.target)) return false;
  if (f.samples.size() == 0) return true;
  const double scale = std::max({1.0, f.samples.cwiseAbs().maxCoeff(), g.samples.cwiseAbs().maxCoeff()});
  return (f.samples - g.samples).cwiseAbs().maxCoeff() <= tol * scale;
}

double trace(const GridKernel& h) {
  if (!(h.source == h.target)) throw ShapeError("trace needs an endomorphism");
  return quad(Vector(h.samples.diagonal()), h.source);
}

double window(double t, const Interval& iv) {
  const double u = (2 * t - iv.lower - iv.upper) / (iv.upper - iv.lower);
  if (std::abs(u) >= 1) return 0;
  return std::exp(1 - 1 / (1 - u * u));
}

GridKernel gaussian_kernel(const Interval& src, const Interval& tgt, const GaussianBump& g) {
  Matrix m(src.n, tgt.n);
  for (int i = 0; i < src.n; ++i) {
    const double x = src.node(i);
    for (int j = 0; j < tgt.n; ++j) {
      const double y = tgt.node(j);
      m(i, j) = std::exp(-((x - g.x0) * (x - g.x0) + (y - g.y0) * (y - g.y0)) / (g.s * g.s)) * window(x, src) *
                window(y, tgt);
    }
  }
  return {single(src), single(tgt), std::move(m)};
}

Vector test_function(const Interval& iv, double center, double width) {
  Vector v(iv.n);
  for (int i = 0; i < iv.n; ++i) {
    const double x = iv.node(i);
    v(i) = std::exp(-(x - center) * (x - center) / (width * width)) * window(x, iv);
  }
  return v;
}

GridKernel heat_kernel(const Interval& iv, double eps) {
  Matrix m(iv.n, iv.n);
  const double c = 1.0 / (std::sqrt(M_PI) * eps);
  for (int i = 0; i < iv.n; ++i) {
    for (int j = 0; j < iv.n; ++j) {
      const double d = iv.node(i) - iv.node(j);
      m(i, j) = c * std::exp(-d * d / (eps * eps));
    }
  }
  return {single(iv), single(iv), std::move(m)};
}

GridKernel random_smooth(core::Lcg& rng, const Domain& a, const Domain& b) {
  const int bumps = rng.range(1, 3);
  std::vector<std::vector<double>> centers;
  std::vector<double> amp, width;
  const std::size_t dims = a.factors.size() + b.factors.size();
  for (int k = 0; k < bumps; ++k) {
    std::vector<double> c(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      const auto& iv = d < a.factors.size() ? a.factors[d] : b.factors[d - a.factors.size()];
      c[d] = rng.uniform(iv.lower, iv.upper);
    }
    centers.push_back(std::move(c));
    amp.push_back(rng.uniform(-1, 1));
    width.push_back(rng.uniform(0.3, 1.0));
  }
  Matrix m(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) {
    auto x = a.point(i);
    for (int j = 0; j < b.size(); ++j) {
      auto y = b.point(j);
      std::vector<double> p = x;
      p.insert(p.end(), y.begin(), y.end());
      double v = 0;
      for (int k = 0; k < bumps; ++k) {
        double r2 = 0;
        for (std::size_t d = 0; d < dims; ++d) r2 += (p[d] - centers[static_cast<std::size_t>(k)][d]) * (p[d] - centers[static_cast<std::size_t>(k)][d]);
        v += amp[static_cast<std::size_t>(k)] * std::exp(-r2 / (width[static_cast<std::size_t>(k)] * width[static_cast<std::size_t>(k)]));
      }
      m(i, j) = v;
    }
  }
  return {a, b, std::move(m)};
}

Category::Scalar Category::to_scalar(const Morphism& f) const {
  if (f.samples.rows() != 1 || f.samples.cols() != 1) throw ShapeError("scalar needs I -> I");
  return f.samples(0, 0);
}

bool Category::scalar_equal(double a, double b) const {
  return std::abs(a - b) <= tol_ * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string Category::describe_scalar(double a) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", a);
  return buf;
}

Category::Object Category::sample_object(core::Lcg& rng, int max_size) const {
  if (max_size < 1 || rng.below(4) == 0) return {};
  const double lo = rng.uniform(-1, 0);
  return single(Interval(lo, lo + rng.uniform(0.5, 2), rng.coin() ? 3 : 5));
}

Category::Morphism Category::sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const {
  auto k = random_smooth(rng, a, b);
  if (a == b && !a.factors.empty() && rng.coin()) {
    Matrix m = k.samples + rng.uniform(0.5, 2) * identity(a).samples;
    return {a, b, std::move(m), false};
  }
  return k;
}

std::tuple<Category::Object, Category::Morphism, Category::Morphism> Category::sample_iso(core::Lcg& rng,
                                                                                         const Object& b) const {
  // Kernels act as operators through K -> W^(1/2) K W^(1/2); an orthogonal
  // operator pulled back this way is invertible in the kernel category.
  const int n = b.size();
  Matrix r(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r(i, j) = rng.uniform(-1, 1);
  }
  Eigen::HouseholderQR<Matrix> qr(r);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Vector s = b.weights().cwiseSqrt().cwiseInverse();
  Matrix m = s.asDiagonal() * q * s.asDiagonal();
  Matrix m_inv = s.asDiagonal() * q.transpose() * s.asDiagonal();
  return {b, {b, b, std::move(m), b.factors.empty()}, {b, b, std::move(m_inv), b.factors.empty()}};
}

Category::Morphism Category::theta(const Morphism& f) const {
  if (!f.smooth) throw PreconditionError("theta needs a nuclear (smooth) kernel");
  Matrix row(1, f.samples.size());
  const auto nt = f.samples.cols();
  for (Eigen::Index x = 0; x < f.samples.rows(); ++x) {
    for (Eigen::Index y = 0; y < nt; ++y) row(0, x * nt + y) = f.samples(x, y);
  }
  return {unit(), drelnum::tensor(f.source, f.target), std::move(row)};
}

Category::Morphism Category::theta_inv(const Morphism& m, const Object& a, const Object& b) const {
  if (m.samples.rows() != 1 || !(m.target == drelnum::tensor(a, b))) throw ShapeError("theta inverse needs I -> A x B");
  Matrix k(a.size(), b.size());
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) k(x, y) = m.samples(0, x * b.size() + y);
  }
  return {a, b, std::move(k)};
}

std::optional<std::pair<Category::Morphism, Category::Morphism>> Category::factorize(const Morphism& h) const {
  // Split the operator W^(1/2) H W^(1/2) = U S V^T as (U S^(1/2)) (S^(1/2) V^T).
  if (!h.smooth || !(h.source == h.target)) return std::nullopt;
  Vector s = h.source.weights().cwiseSqrt();
  Matrix op = s.asDiagonal() * h.samples * s.asDiagonal();
  Eigen::JacobiSVD<Matrix> svd(op, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Vector root = svd.singularValues().cwiseSqrt();
  Vector si = s.cwiseInverse();
  Matrix f = si.asDiagonal() * svd.matrixU() * root.asDiagonal() * si.asDiagonal();
  Matrix g = si.cwiseProduct(root).asDiagonal() * svd.matrixV().transpose() * si.asDiagonal();
  return std::make_pair(Morphism{h.source, h.source, std::move(f)}, Morphism{h.source, h.source, std::move(g)});
}

}  // namespace nucleal::drelnum
