#include "nucleal/finstoch.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace nucleal::finstoch {

namespace {

Rational sum(const RVector& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i);
  return s;
}

std::string vec_str(const RVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + v(i).str();
  return s;
}

}  // namespace

ProbSpace::ProbSpace(FinSet pts, RVector m) : points(std::move(pts)), mass(std::move(m)) {
  if (mass.size() != points.size()) throw InvariantError("mass vector does not match the points");
  for (Eigen::Index i = 0; i < mass.size(); ++i) {
    if (mass(i).sign() < 0) throw InvariantError("negative point mass");
  }
  if (sum(mass) != Rational(1)) throw InvariantError("point masses sum to " + sum(mass).str() + ", not 1");
}

ProbSpace ProbSpace::uniform(int n) {
  RVector m(n);
  for (int i = 0; i < n; ++i) m(i) = Rational(1, n);
  return {FinSet::range(n), m};
}

ProbSpace ProbSpace::point() {
  RVector m(1);
  m(0) = 1;
  return {FinSet::point(), m};
}

std::string ProbSpace::describe() const { return "(" + vec_str(mass) + ")"; }

bool same_space(const ProbSpace& a, const ProbSpace& b) { return a.size() == b.size() && a.mass == b.mass; }

ProbSpace product(const ProbSpace& a, const ProbSpace& b) {
  RVector m = Eigen::kroneckerProduct(a.mass, b.mass);
  return {nucleal::product(a.points, b.points), m};
}

JointMeasure::JointMeasure(ProbSpace s, ProbSpace t, RMatrix w)
    : source(std::move(s)), target(std::move(t)), weight(std::move(w)) {
  if (weight.rows() != source.size() || weight.cols() != target.size()) {
    throw InvariantError("weight matrix does not match the spaces");
  }
  for (Eigen::Index x = 0; x < weight.rows(); ++x) {
    for (Eigen::Index y = 0; y < weight.cols(); ++y) {
      if (weight(x, y).sign() < 0) throw InvariantError("negative weight");
    }
  }
  auto [mx, my] = marginals(*this);
  for (Eigen::Index x = 0; x < mx.size(); ++x) {
    if (source.mass(x).is_zero() && !mx(x).is_zero()) {
      throw InvariantError("source marginal is not absolutely continuous at " + source.points.labels[static_cast<std::size_t>(x)]);
    }
  }
  for (Eigen::Index y = 0; y < my.size(); ++y) {
    if (target.mass(y).is_zero() && !my(y).is_zero()) {
      throw InvariantError("target marginal is not absolutely continuous at " + target.points.labels[static_cast<std::size_t>(y)]);
    }
  }
}

std::string JointMeasure::describe() const {
  std::string s = source.describe() + "->" + target.describe() + "[";
  for (Eigen::Index x = 0; x < weight.rows(); ++x) {
    s += x ? "; " : "";
    for (Eigen::Index y = 0; y < weight.cols(); ++y) s += (y ? " " : "") + weight(x, y).str();
  }
  return s + "]";
}

StochKernel::StochKernel(RMatrix r) : rows(std::move(r)) {
  for (Eigen::Index x = 0; x < rows.rows(); ++x) {
    Rational s = 0;
    for (Eigen::Index y = 0; y < rows.cols(); ++y) {
      if (rows(x, y).sign() < 0) throw InvariantError("negative kernel entry");
      s += rows(x, y);
    }
    if (s != Rational(1)) throw InvariantError("kernel row " + std::to_string(x) + " sums to " + s.str());
  }
}

std::pair<RVector, RVector> marginals(const JointMeasure& a) {
  RVector mx = RVector::Zero(a.weight.rows());
  RVector my = RVector::Zero(a.weight.cols());
  for (Eigen::Index x = 0; x < a.weight.rows(); ++x) {
    for (Eigen::Index y = 0; y < a.weight.cols(); ++y) {
      mx(x) += a.weight(x, y);
      my(y) += a.weight(x, y);
    }
  }
  return {mx, my};
}

namespace {

StochKernel conditional(const RMatrix& w, const RVector& marginal) {
  RMatrix q = RMatrix::Zero(w.rows(), w.cols());
  for (Eigen::Index x = 0; x < w.rows(); ++x) {
    if (marginal(x).is_zero()) {
      q(x, 0) = 1;
    } else {
      for (Eigen::Index y = 0; y < w.cols(); ++y) q(x, y) = w(x, y) / marginal(x);
    }
  }
  return StochKernel(q);
}

}  // namespace

std::pair<StochKernel, StochKernel> disintegrate(const JointMeasure& a) {
  auto [mx, my] = marginals(a);
  RMatrix wt = a.weight.transpose();
  return {conditional(a.weight, mx), conditional(wt, my)};
}

RVector rn_derivative(const JointMeasure& a) {
  auto mx = marginals(a).first;
  RVector h = RVector::Zero(mx.size());
  for (Eigen::Index x = 0; x < mx.size(); ++x) {
    if (!a.source.mass(x).is_zero()) h(x) = mx(x) / a.source.mass(x);
  }
  return h;
}

RMatrix associated_kernel(const JointMeasure& a) {
  RMatrix f = RMatrix::Zero(a.weight.rows(), a.weight.cols());
  for (Eigen::Index x = 0; x < f.rows(); ++x) {
    if (a.source.mass(x).is_zero()) continue;
    for (Eigen::Index y = 0; y < f.cols(); ++y) f(x, y) = a.weight(x, y) / a.source.mass(x);
  }
  return f;
}

StochKernel compose(const StochKernel& first, const StochKernel& second) {
  if (first.rows.cols() != second.rows.rows()) throw ShapeError("kernels do not compose");
  RMatrix p = first.rows * second.rows;
  return StochKernel(p);
}

StochKernel identity_kernel(int n) { return StochKernel(RMatrix::Identity(n, n)); }

JointMeasure compose(const JointMeasure& a, const JointMeasure& b) {
  if (!same_space(a.target, b.source)) {
    throw ShapeError("cannot compose: " + a.target.describe() + " vs " + b.source.describe());
  }
  const auto& nu = a.target.mass;
  RMatrix g = RMatrix::Zero(a.weight.rows(), b.weight.cols());
  for (Eigen::Index y = 0; y < nu.size(); ++y) {
    if (nu(y).is_zero()) continue;
    for (Eigen::Index x = 0; x < g.rows(); ++x) {
      if (a.weight(x, y).is_zero()) continue;
      const Rational ax = a.weight(x, y) / nu(y);
      for (Eigen::Index z = 0; z < g.cols(); ++z) g(x, z) += ax * b.weight(y, z);
    }
  }
  return {a.source, b.target, std::move(g)};
}

JointMeasure identity(const ProbSpace& x) {
  RMatrix d = RMatrix::Zero(x.size(), x.size());
  for (int i = 0; i < x.size(); ++i) d(i, i) = x.mass(i);
  return {x, x, std::move(d)};
}

JointMeasure product_measure(const ProbSpace& x, const ProbSpace& y) {
  RMatrix w = x.mass * y.mass.transpose();
  return {x, y, std::move(w)};
}

JointMeasure transpose(const JointMeasure& a) { return {a.target, a.source, a.weight.transpose()}; }

JointMeasure tensor(const JointMeasure& a, const JointMeasure& b) {
  RMatrix w = Eigen::kroneckerProduct(a.weight, b.weight);
  return {product(a.source, b.source), product(a.target, b.target), std::move(w)};
}

JointMeasure symmetry(const ProbSpace& x, const ProbSpace& y) {
  auto src = product(x, y), tgt = product(y, x);
  RMatrix w = RMatrix::Zero(src.size(), tgt.size());
  auto idx = swap_index(x.size(), y.size());
  for (std::size_t i = 0; i < idx.size(); ++i) w(static_cast<Eigen::Index>(i), idx[i]) = src.mass(static_cast<Eigen::Index>(i));
  return {src, tgt, std::move(w)};
}

bool equal(const JointMeasure& a, const JointMeasure& b) {
  return same_space(a.source, b.source) && same_space(a.target, b.target) && a.weight == b.weight;
}

bool is_probability(const JointMeasure& a) {
  Rational s = 0;
  for (Eigen::Index x = 0; x < a.weight.rows(); ++x) {
    for (Eigen::Index y = 0; y < a.weight.cols(); ++y) s += a.weight(x, y);
  }
  return s == Rational(1);
}

bool is_coupling(const JointMeasure& a) {
  auto [mx, my] = marginals(a);
  return mx == a.source.mass && my == a.target.mass;
}

IsoWitness iso_equivalent(const ProbSpace& p, const ProbSpace& q) {
  if (p.points != q.points) throw ShapeError("isomorphism check needs the same points");
  IsoWitness out;
  for (int i = 0; i < p.size(); ++i) {
    if (p.mass(i).is_zero() != q.mass(i).is_zero()) return out;
  }
  RMatrix hw = RMatrix::Zero(p.size(), p.size()), kw = RMatrix::Zero(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) {
    hw(i, i) = p.mass(i);
    kw(i, i) = q.mass(i);
  }
  JointMeasure h(p, q, hw), k(q, p, kw);
  if (!equal(compose(h, k), identity(p)) || !equal(compose(k, h), identity(q))) {
    throw InvariantError("isomorphism witnesses do not compose to the identity");
  }
  out.equivalent = true;
  out.h = std::move(h);
  out.k = std::move(k);
  return out;
}

bool is_nuclear(const JointMeasure& a) {
  for (Eigen::Index x = 0; x < a.weight.rows(); ++x) {
    for (Eigen::Index y = 0; y < a.weight.cols(); ++y) {
      if (!a.weight(x, y).is_zero() && (a.source.mass(x) * a.target.mass(y)).is_zero()) return false;
    }
  }
  return true;
}

RMatrix density(const JointMeasure& a) {
  if (!is_nuclear(a)) throw PreconditionError("density needs a nuclear morphism");
  RMatrix f = RMatrix::Zero(a.weight.rows(), a.weight.cols());
  for (Eigen::Index x = 0; x < f.rows(); ++x) {
    for (Eigen::Index y = 0; y < f.cols(); ++y) {
      const Rational cell = a.source.mass(x) * a.target.mass(y);
      if (!cell.is_zero()) f(x, y) = a.weight(x, y) / cell;
    }
  }
  return f;
}

JointMeasure theta(const JointMeasure& a) {
  if (!is_nuclear(a)) throw PreconditionError("theta needs a nuclear morphism");
  const Eigen::Index ny = a.weight.cols();
  RMatrix w(1, a.weight.size());
  for (Eigen::Index x = 0; x < a.weight.rows(); ++x) {
    for (Eigen::Index y = 0; y < ny; ++y) w(0, x * ny + y) = a.weight(x, y);
  }
  return {ProbSpace::point(), product(a.source, a.target), std::move(w)};
}

JointMeasure theta_inv(const JointMeasure& m, const ProbSpace& x, const ProbSpace& y) {
  if (m.weight.rows() != 1 || !same_space(m.target, product(x, y))) throw ShapeError("theta inverse needs I -> X x Y");
  RMatrix w(x.size(), y.size());
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) w(i, j) = m.weight(0, i * y.size() + j);
  }
  return {x, y, std::move(w)};
}

JointMeasure from_density(const RMatrix& f, const ProbSpace& x, const ProbSpace& y) {
  if (f.rows() != x.size() || f.cols() != y.size()) throw ShapeError("density does not match the spaces");
  RMatrix w(f.rows(), f.cols());
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) w(i, j) = f(i, j) * x.mass(i) * y.mass(j);
  }
  return {x, y, std::move(w)};
}

RMatrix nuclear_compose_density(const RMatrix& f, const RMatrix& g, const RVector& nu) {
  if (f.cols() != g.rows() || f.cols() != nu.size()) throw ShapeError("densities do not compose");
  RMatrix d = RMatrix::Zero(f.rows(), g.cols());
  for (Eigen::Index x = 0; x < f.rows(); ++x) {
    for (Eigen::Index z = 0; z < g.cols(); ++z) {
      for (Eigen::Index y = 0; y < nu.size(); ++y) d(x, z) += f(x, y) * g(y, z) * nu(y);
    }
  }
  return d;
}

Rational trace_nuclear(const JointMeasure& h) {
  if (!same_space(h.source, h.target)) throw ShapeError("trace needs an endomorphism");
  auto f = density(h);
  Rational t = 0;
  for (int x = 0; x < h.source.size(); ++x) t += f(x, x) * h.source.mass(x);
  return t;
}

ProbSpace random_space(core::Lcg& rng, int n, bool allow_null) {
  if (n < 1) throw PreconditionError("a probability space needs a point");
  std::vector<long> w(static_cast<std::size_t>(n));
  long total = 0;
  for (auto& v : w) {
    v = (allow_null && rng.below(5) == 0) ? 0 : static_cast<long>(rng.range(1, 4));
    total += v;
  }
  if (total == 0) {
    w[rng.below(w.size())] = 1;
    total = 1;
  }
  RVector m(n);
  for (int i = 0; i < n; ++i) m(i) = Rational(w[static_cast<std::size_t>(i)], total);
  return {FinSet::range(n), m};
}

JointMeasure random_measure(core::Lcg& rng, const ProbSpace& x, const ProbSpace& y) {
  RMatrix w = RMatrix::Zero(x.size(), y.size());
  const std::uint64_t density = rng.below(4) + 1;
  for (int i = 0; i < x.size(); ++i) {
    if (x.mass(i).is_zero()) continue;
    for (int j = 0; j < y.size(); ++j) {
      if (y.mass(j).is_zero() || rng.below(4) >= density) continue;
      w(i, j) = Rational(static_cast<long>(rng.range(1, 5)), static_cast<long>(rng.range(1, 6)));
    }
  }
  return {x, y, std::move(w)};
}

JointMeasure random_coupling(core::Lcg& rng, const ProbSpace& x, const ProbSpace& y) {
  // Mix the product coupling with the north-west corner coupling.
  RMatrix nw = RMatrix::Zero(x.size(), y.size());
  RVector r = x.mass, c = y.mass;
  Eigen::Index i = 0, j = 0;
  while (i < r.size() && j < c.size()) {
    const Rational t = std::min(r(i), c(j));
    nw(i, j) += t;
    r(i) -= t;
    c(j) -= t;
    if (r(i).is_zero()) {
      ++i;
    } else {
      ++j;
    }
  }
  const Rational s(static_cast<long>(rng.range(0, 6)), 6);
  RMatrix w = product_measure(x, y).weight * s + nw * (Rational(1) - s);
  return {x, y, std::move(w)};
}

Category::Scalar Category::to_scalar(const Morphism& f) const {
  if (f.weight.rows() != 1 || f.weight.cols() != 1) throw ShapeError("scalar needs I -> I");
  return f.weight(0, 0);
}

Category::Object Category::sample_object(core::Lcg& rng, int max_size) const {
  return random_space(rng, rng.range(1, std::max(1, max_size)));
}

std::tuple<Category::Object, Category::Morphism, Category::Morphism> Category::sample_iso(core::Lcg& rng,
                                                                                         const Object& b) const {
  RVector m(b.size());
  long total = 0;
  std::vector<long> w(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < b.size(); ++i) {
    w[static_cast<std::size_t>(i)] = b.mass(i).is_zero() ? 0 : static_cast<long>(rng.range(1, 5));
    total += w[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < b.size(); ++i) m(i) = Rational(w[static_cast<std::size_t>(i)], total);
  ProbSpace other(b.points, m);
  auto wit = iso_equivalent(b, other);
  return {other, *wit.h, *wit.k};
}

}  // namespace nucleal::finstoch
