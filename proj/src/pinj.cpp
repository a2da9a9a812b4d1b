#include "nucleal/pinj.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nucleal/core/error.hpp"

namespace nucleal::pinj {

namespace {

std::string shape(const PartialInjection& f) {
  return std::to_string(f.source.size()) + "->" + std::to_string(f.target.size());
}

}  // namespace

PartialInjection::PartialInjection(FinSet s, FinSet t, std::vector<int> m)
    : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source.size()) throw InvariantError("partial injection map has wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(target.size()), false);
  for (int y : map) {
    if (y < -1 || y >= target.size()) throw InvariantError("partial injection maps outside its target");
    if (y < 0) continue;
    if (hit[static_cast<std::size_t>(y)]) throw InvariantError("partial injection is not injective on its domain");
    hit[static_cast<std::size_t>(y)] = true;
  }
}

PartialInjection::PartialInjection(FinSet s, FinSet t)
    : source(std::move(s)), target(std::move(t)), map(static_cast<std::size_t>(source.size()), -1) {}

int PartialInjection::domain_size() const {
  return static_cast<int>(std::count_if(map.begin(), map.end(), [](int y) { return y >= 0; }));
}

std::string PartialInjection::describe() const {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < source.size(); ++x) {
    if (!defined(x)) continue;
    s += (first ? "" : ",") + source.labels[static_cast<std::size_t>(x)] + "->" +
         target.labels[static_cast<std::size_t>((*this)(x))];
    first = false;
  }
  return s + "}:" + shape(*this);
}

FinSet unit() { return FinSet::point(); }

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.target.size() != g.source.size()) throw ShapeError("cannot compose " + shape(f) + " with " + shape(g));
  std::vector<int> m(f.map.size(), -1);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (f.map[x] >= 0) m[x] = g(f.map[x]);
  }
  return {f.source, g.target, std::move(m)};
}

PartialInjection identity(const FinSet& x) {
  std::vector<int> m(static_cast<std::size_t>(x.size()));
  std::iota(m.begin(), m.end(), 0);
  return {x, x, std::move(m)};
}

PartialInjection converse(const PartialInjection& f) {
  PartialInjection out(f.target, f.source);
  for (int x = 0; x < f.source.size(); ++x) {
    if (f.defined(x)) out.map[static_cast<std::size_t>(f(x))] = x;
  }
  return out;
}

PartialInjection tensor(const PartialInjection& f, const PartialInjection& g) {
  const int ns = g.source.size(), nt = g.target.size();
  std::vector<int> m(static_cast<std::size_t>(f.source.size() * ns), -1);
  for (int x = 0; x < f.source.size(); ++x) {
    for (int u = 0; u < ns; ++u) {
      if (f.defined(x) && g.defined(u)) m[static_cast<std::size_t>(x * ns + u)] = f(x) * nt + g(u);
    }
  }
  return {product(f.source, g.source), product(f.target, g.target), std::move(m)};
}

PartialInjection symmetry(const FinSet& x, const FinSet& y) {
  auto p = swap_index(x.size(), y.size());
  return {product(x, y), product(y, x), std::move(p)};
}

bool equal(const PartialInjection& f, const PartialInjection& g) {
  return f.source.size() == g.source.size() && f.target.size() == g.target.size() && f.map == g.map;
}

bool is_nuclear(const PartialInjection& f) { return f.domain_size() <= 1; }

PartialInjection theta(const PartialInjection& f) {
  if (!is_nuclear(f)) throw PreconditionError("theta needs |Dom(f)| <= 1, got " + f.describe());
  PartialInjection out(unit(), product(f.source, f.target));
  for (int x = 0; x < f.source.size(); ++x) {
    if (f.defined(x)) out.map[0] = x * f.target.size() + f(x);
  }
  return out;
}

PartialInjection theta_inv(const PartialInjection& m, const FinSet& x, const FinSet& y) {
  if (m.source.size() != 1 || m.target.size() != x.size() * y.size()) throw ShapeError("theta inverse needs I -> X x Y");
  PartialInjection out(x, y);
  if (m.defined(0)) out.map[static_cast<std::size_t>(m(0) / y.size())] = m(0) % y.size();
  return out;
}

bool trace(const PartialInjection& f) {
  if (f.source.size() != f.target.size()) throw ShapeError("trace needs an endomorphism, got " + shape(f));
  if (f.domain_size() != 1) return false;
  for (int x = 0; x < f.source.size(); ++x) {
    if (f.defined(x)) return f(x) == x;
  }
  return false;
}

bool is_u_nuclear(const PartialInjection& f, const FinSet& x, const FinSet& u) {
  if (f.source.size() != x.size() * u.size()) throw ShapeError("U-nuclear test needs X x U -> Y");
  const int nu_ = u.size();
  for (int a = 0; a < x.size(); ++a) {
    int hits = 0;
    for (int k = 0; k < nu_; ++k) hits += f.defined(a * nu_ + k) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

bool param_member(const PartialInjection& f, const FinSet& a, const FinSet& b, const FinSet& u) {
  if (f.source.size() != a.size() * u.size() || f.target.size() != b.size() * u.size()) return false;
  return is_u_nuclear(f, a, u) && is_u_nuclear(converse(f), b, u);
}

PartialInjection param_trace(const PartialInjection& f, const FinSet& a, const FinSet& b, const FinSet& u) {
  if (f.source.size() != a.size() * u.size() || f.target.size() != b.size() * u.size()) {
    throw ShapeError("parametrized trace needs A x U -> B x U, got " + shape(f));
  }
  if (!param_member(f, a, b, u)) throw PreconditionError("not in I^U_{A,B}: " + f.describe());
  const int nu_ = u.size();
  std::vector<int> m(static_cast<std::size_t>(a.size()), -1);
  for (int x = 0; x < a.size(); ++x) {
    for (int k = 0; k < nu_; ++k) {
      int i = x * nu_ + k;
      if (f.defined(i) && f(i) % nu_ == k) m[static_cast<std::size_t>(x)] = f(i) / nu_;
    }
  }
  try {
    return {a, b, std::move(m)};
  } catch (const InvariantError&) {
    throw InvariantError("parametrized trace is not injective for " + f.describe());
  }
}

Category::Scalar Category::to_scalar(const Morphism& f) const {
  if (f.source.size() != 1 || f.target.size() != 1) throw ShapeError("scalar needs I -> I");
  return f.defined(0);
}

Category::Morphism Category::sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const {
  std::vector<int> targets(static_cast<std::size_t>(b.size()));
  std::iota(targets.begin(), targets.end(), 0);
  for (std::size_t i = targets.size(); i > 1; --i) std::swap(targets[i - 1], targets[rng.below(i)]);
  PartialInjection f(a, b);
  const std::uint64_t density = 1 + rng.below(4);
  std::size_t next = 0;
  for (int x = 0; x < a.size() && next < targets.size(); ++x) {
    if (rng.below(4) < density) f.map[static_cast<std::size_t>(x)] = targets[next++];
  }
  return f;
}

Category::Morphism Category::sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const {
  PartialInjection f(a, b);
  if (a.size() > 0 && b.size() > 0 && rng.below(5) > 0) {
    f.map[rng.below(static_cast<std::uint64_t>(a.size()))] = static_cast<int>(rng.below(static_cast<std::uint64_t>(b.size())));
  }
  return f;
}

std::vector<Category::Object> Category::objects_up_to(int n) const {
  std::vector<Object> out;
  for (int k = 0; k <= n; ++k) out.push_back(FinSet::range(k));
  return out;
}

double Category::morphism_count(const Object& a, const Object& b) const {
  // sum_k C(a,k) C(b,k) k!
  double total = 0;
  for (int k = 0; k <= std::min(a.size(), b.size()); ++k) {
    double term = 1;
    for (int i = 0; i < k; ++i) term *= static_cast<double>(a.size() - i) * (b.size() - i) / (i + 1);
    total += term;
  }
  return total;
}

std::vector<Category::Morphism> Category::morphisms(const Object& a, const Object& b) const {
  if (morphism_count(a, b) > 5e6) throw ConfigurationError("hom-set too large to enumerate");
  std::vector<Morphism> out;
  std::vector<int> m(static_cast<std::size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == a.size()) {
      out.emplace_back(a, b, m);
      return;
    }
    m[static_cast<std::size_t>(x)] = -1;
    self(self, x + 1);
    for (int y = 0; y < b.size(); ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      m[static_cast<std::size_t>(x)] = y;
      self(self, x + 1);
      used[static_cast<std::size_t>(y)] = false;
    }
    m[static_cast<std::size_t>(x)] = -1;
  };
  rec(rec, 0);
  return out;
}

std::optional<std::pair<Category::Morphism, Category::Morphism>> Category::factorize(const Morphism& h) const {
  if (!is_nuclear(h)) return std::nullopt;
  if (h.domain_size() == 0) {
    FinSet empty;
    return std::make_pair(PartialInjection(h.source, empty), PartialInjection(empty, h.target));
  }
  PartialInjection f(h.source, FinSet::point()), g(FinSet::point(), h.target);
  for (int x = 0; x < h.source.size(); ++x) {
    if (h.defined(x)) {
      f.map[static_cast<std::size_t>(x)] = 0;
      g.map[0] = h(x);
    }
  }
  return std::make_pair(f, g);
}

std::tuple<Category::Object, Category::Morphism, Category::Morphism> Category::sample_iso(core::Lcg& rng,
                                                                                       const Object& b) const {
  std::vector<int> perm(static_cast<std::size_t>(b.size()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  PartialInjection m(b, b, perm);
  return {b, m, converse(m)};
}

}  // namespace nucleal::pinj
