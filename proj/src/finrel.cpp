#include "nucleal/finrel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

#include "nucleal/core/error.hpp"

namespace nucleal::finrel {

namespace {

void require_shape(const Relation& r) {
  if (r.pairs.rows() != r.source.size() || r.pairs.cols() != r.target.size()) {
    throw InvariantError("relation matrix is " + std::to_string(r.pairs.rows()) + "x" + std::to_string(r.pairs.cols()) +
                         " but objects have sizes " + std::to_string(r.source.size()) + " and " +
                         std::to_string(r.target.size()));
  }
}

}  // namespace

Relation::Relation(FinSet s, FinSet t, BoolMatrix p) : source(std::move(s)), target(std::move(t)), pairs(std::move(p)) {
  require_shape(*this);
}

Relation::Relation(FinSet s, FinSet t)
    : source(std::move(s)), target(std::move(t)), pairs(BoolMatrix::Zero(source.size(), target.size())) {}

std::string Relation::describe() const {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < source.size(); ++x) {
    for (int y = 0; y < target.size(); ++y) {
      if (!pairs(x, y)) continue;
      s += (first ? "" : ",") + std::string("(") + source.labels[static_cast<std::size_t>(x)] + "," +
           target.labels[static_cast<std::size_t>(y)] + ")";
      first = false;
    }
  }
  return s + "}:" + std::to_string(source.size()) + "->" + std::to_string(target.size());
}

FinSet unit() { return FinSet::point(); }

Relation compose(const Relation& r, const Relation& s) {
  if (r.target.size() != s.source.size()) {
    throw ShapeError("cannot compose " + std::to_string(r.source.size()) + "->" + std::to_string(r.target.size()) +
                     " with " + std::to_string(s.source.size()) + "->" + std::to_string(s.target.size()));
  }
  BoolMatrix out = ((r.pairs.cast<int>() * s.pairs.cast<int>()).array() > 0).matrix();
  return {r.source, s.target, std::move(out)};
}

Relation identity(const FinSet& x) {
  BoolMatrix id = BoolMatrix::Identity(x.size(), x.size());
  return {x, x, std::move(id)};
}

Relation converse(const Relation& r) { return {r.target, r.source, r.pairs.transpose()}; }

Relation tensor(const Relation& r, const Relation& s) {
  BoolMatrix k = Eigen::kroneckerProduct(r.pairs, s.pairs);
  return {product(r.source, s.source), product(r.target, s.target), std::move(k)};
}

Relation symmetry(const FinSet& x, const FinSet& y) {
  Relation out(product(x, y), product(y, x));
  auto p = swap_index(x.size(), y.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.pairs(static_cast<Eigen::Index>(i), p[i]) = true;
  return out;
}

Relation nu(const FinSet& x) {
  Relation out(unit(), product(x, x));
  for (int i = 0; i < x.size(); ++i) out.pairs(0, i * x.size() + i) = true;
  return out;
}

Relation psi(const FinSet& x) { return converse(nu(x)); }

bool trace_endo(const Relation& r) {
  if (r.source.size() != r.target.size()) throw ShapeError("trace needs an endomorphism");
  return r.pairs.diagonal().any();
}

Relation param_trace(const Relation& r, const FinSet& a, const FinSet& b, const FinSet& u) {
  const int nu_ = u.size();
  if (r.source.size() != a.size() * nu_ || r.target.size() != b.size() * nu_) {
    throw ShapeError("parametrized trace needs A x U -> B x U");
  }
  Relation out(a, b);
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) {
      for (int k = 0; k < nu_ && !out.pairs(x, y); ++k) out.pairs(x, y) = r.pairs(x * nu_ + k, y * nu_ + k);
    }
  }
  return out;
}

Relation theta(const Relation& r) {
  Relation out(unit(), product(r.source, r.target));
  const int ny = r.target.size();
  for (int x = 0; x < r.source.size(); ++x) {
    for (int y = 0; y < ny; ++y) out.pairs(0, x * ny + y) = r.pairs(x, y);
  }
  return out;
}

Relation theta_inv(const Relation& m, const FinSet& x, const FinSet& y) {
  if (m.source.size() != 1 || m.target.size() != x.size() * y.size()) {
    throw ShapeError("theta inverse needs I -> X x Y");
  }
  Relation out(x, y);
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) out.pairs(i, j) = m.pairs(0, i * y.size() + j);
  }
  return out;
}

bool equal(const Relation& a, const Relation& b) {
  return a.source.size() == b.source.size() && a.target.size() == b.target.size() && a.pairs == b.pairs;
}

Category::Scalar Category::to_scalar(const Morphism& f) const {
  if (f.source.size() != 1 || f.target.size() != 1) throw ShapeError("scalar needs I -> I");
  return f.pairs(0, 0);
}

Category::Morphism Category::sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const {
  Relation r(a, b);
  // Vary density so sparse and dense relations both appear.
  const std::uint64_t density = rng.below(5);
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) r.pairs(x, y) = rng.below(4) < density;
  }
  return r;
}

std::vector<Category::Object> Category::objects_up_to(int n) const {
  std::vector<Object> out;
  for (int k = 0; k <= n; ++k) out.push_back(FinSet::range(k));
  return out;
}

double Category::morphism_count(const Object& a, const Object& b) const {
  return std::ldexp(1.0, a.size() * b.size());
}

std::vector<Category::Morphism> Category::morphisms(const Object& a, const Object& b) const {
  const int bits = a.size() * b.size();
  if (bits > 24) throw ConfigurationError("hom-set too large to enumerate");
  std::vector<Morphism> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
    Relation r(a, b);
    for (int i = 0; i < bits; ++i) r.pairs(i / b.size(), i % b.size()) = (mask >> i) & 1U;
    out.push_back(std::move(r));
  }
  return out;
}

std::tuple<Category::Object, Category::Morphism, Category::Morphism> Category::sample_iso(core::Lcg& rng,
                                                                                       const Object& b) const {
  std::vector<int> perm(static_cast<std::size_t>(b.size()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Relation m(b, b);
  for (int i = 0; i < b.size(); ++i) m.pairs(i, perm[static_cast<std::size_t>(i)]) = true;
  return {b, m, converse(m)};
}

bool Category::param_member(const Morphism& f, const Object& a, const Object& b, const Object& u) const {
  return f.source.size() == a.size() * u.size() && f.target.size() == b.size() * u.size();
}

}  // namespace nucleal::finrel
