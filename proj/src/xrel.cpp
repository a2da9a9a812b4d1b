#include "nucleal/xrel.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <unsupported/Eigen/KroneckerProduct>

#include "nucleal/core/error.hpp"

namespace nucleal::xrel {

CommMonoid::CommMonoid(std::vector<std::string> els, std::vector<std::vector<int>> tab, int unit, std::string label)
    : elements(std::move(els)), table(std::move(tab)), e(unit), name(std::move(label)) {
  const int n = size();
  if (name.empty()) name = "M" + std::to_string(n);
  if (static_cast<int>(table.size()) != n) throw InvariantError("monoid table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvariantError("monoid table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvariantError("monoid table entry out of range");
    }
  }
  if (e < 0 || e >= n) throw InvariantError("monoid identity out of range");
  for (int a = 0; a < n; ++a) {
    if (mul(e, a) != a) throw InvariantError("monoid identity is not neutral");
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) throw InvariantError("monoid is not commutative");
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvariantError("monoid is not associative");
      }
    }
  }
}

CommMonoid CommMonoid::cyclic(int n) {
  std::vector<std::string> els;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    els.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return {els, tab, 0, "Z/" + std::to_string(n)};
}

CrossedMSet::CrossedMSet(MonoidPtr m, FinSet c, std::vector<std::vector<int>> acts, std::vector<int> degs)
    : monoid(std::move(m)), carrier(std::move(c)), action(std::move(acts)), degree(std::move(degs)) {
  const int nm = monoid->size(), n = carrier.size();
  if (static_cast<int>(action.size()) != nm || static_cast<int>(degree.size()) != n) {
    throw InvariantError("crossed M-set tables have the wrong shape");
  }
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n) throw InvariantError("crossed M-set action row has the wrong length");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvariantError("crossed M-set action leaves the carrier");
    }
  }
  for (int d : degree) {
    if (d < 0 || d >= nm) throw InvariantError("crossed M-set degree outside the monoid");
  }
  for (int x = 0; x < n; ++x) {
    if (act(monoid->e, x) != x) throw InvariantError("action of e is not the identity");
    for (int a = 0; a < nm; ++a) {
      if (deg(act(a, x)) != deg(x)) throw InvariantError("action does not preserve degree: |mx| != |x|");
      for (int b = 0; b < nm; ++b) {
        if (act(a, act(b, x)) != act(monoid->mul(a, b), x)) throw InvariantError("action is not a monoid action");
      }
    }
  }
}

std::string CrossedMSet::describe() const {
  std::string s = std::to_string(size()) + "[deg";
  for (int d : degree) s += " " + monoid->elements[static_cast<std::size_t>(d)];
  s += ";act";
  for (std::size_t m = 0; m < action.size(); ++m) {
    if (static_cast<int>(m) == monoid->e) continue;
    s += " ";
    for (int v : action[m]) s += std::to_string(v);
  }
  return s + "]";
}

bool same_object(const CrossedMSet& a, const CrossedMSet& b) {
  return a.size() == b.size() && a.degree == b.degree && a.action == b.action &&
         (a.monoid == b.monoid || *a.monoid == *b.monoid);
}

namespace {

void require_same_monoid(const CrossedMSet& a, const CrossedMSet& b) {
  if (!(a.monoid == b.monoid || *a.monoid == *b.monoid)) throw ShapeError("objects live over different monoids");
}

}  // namespace

XRelMorphism::XRelMorphism(CrossedMSet s, CrossedMSet t, BoolMatrix p)
    : source(std::move(s)), target(std::move(t)), pairs(std::move(p)) {
  require_same_monoid(source, target);
  if (pairs.rows() != source.size() || pairs.cols() != target.size()) {
    throw InvariantError("relation matrix does not match the objects");
  }
  for (int x = 0; x < source.size(); ++x) {
    for (int y = 0; y < target.size(); ++y) {
      if (!pairs(x, y)) continue;
      if (source.deg(x) != target.deg(y)) throw InvariantError("related points have different degrees: xRy needs |x| = |y|");
      for (int m = 0; m < source.monoid->size(); ++m) {
        if (!pairs(source.act(m, x), target.act(m, y))) throw InvariantError("relation is not closed: xRy needs mx R my");
      }
    }
  }
}

std::string XRelMorphism::describe() const {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < source.size(); ++x) {
    for (int y = 0; y < target.size(); ++y) {
      if (!pairs(x, y)) continue;
      s += (first ? "" : ",") + std::string("(") + std::to_string(x) + "," + std::to_string(y) + ")";
      first = false;
    }
  }
  return s + "}:" + source.describe() + "->" + target.describe();
}

CrossedMSet unit_object(const MonoidPtr& m) {
  std::vector<std::vector<int>> act(static_cast<std::size_t>(m->size()), std::vector<int>{0});
  return {m, FinSet::point(), act, {m->e}};
}

CrossedMSet tensor(const CrossedMSet& a, const CrossedMSet& b) {
  require_same_monoid(a, b);
  const int nb = b.size();
  const auto& m = *a.monoid;
  std::vector<std::vector<int>> act(static_cast<std::size_t>(m.size()),
                                    std::vector<int>(static_cast<std::size_t>(a.size() * nb)));
  std::vector<int> deg(static_cast<std::size_t>(a.size() * nb));
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < nb; ++y) {
      deg[static_cast<std::size_t>(x * nb + y)] = m.mul(a.deg(x), b.deg(y));
      for (int k = 0; k < m.size(); ++k) {
        act[static_cast<std::size_t>(k)][static_cast<std::size_t>(x * nb + y)] = a.act(k, x) * nb + b.act(k, y);
      }
    }
  }
  CrossedMSet out;
  out.monoid = a.monoid;
  out.carrier = product(a.carrier, b.carrier);
  out.action = std::move(act);
  out.degree = std::move(deg);
  return out;
}

XRelMorphism compose(const XRelMorphism& r, const XRelMorphism& s) {
  if (!same_object(r.target, s.source)) throw ShapeError("cannot compose: " + r.target.describe() + " vs " + s.source.describe());
  BoolMatrix p = ((r.pairs.cast<int>() * s.pairs.cast<int>()).array() > 0).matrix();
  return {r.source, s.target, std::move(p)};
}

XRelMorphism identity(const CrossedMSet& x) {
  BoolMatrix p = BoolMatrix::Identity(x.size(), x.size());
  return {x, x, std::move(p)};
}

XRelMorphism converse(const XRelMorphism& r) { return {r.target, r.source, r.pairs.transpose()}; }

XRelMorphism tensor(const XRelMorphism& r, const XRelMorphism& s) {
  BoolMatrix p = Eigen::kroneckerProduct(r.pairs, s.pairs);
  return {tensor(r.source, s.source), tensor(r.target, s.target), std::move(p)};
}

XRelMorphism symmetry(const CrossedMSet& x, const CrossedMSet& y) {
  auto src = tensor(x, y), tgt = tensor(y, x);
  BoolMatrix p = BoolMatrix::Zero(src.size(), tgt.size());
  auto idx = swap_index(x.size(), y.size());
  for (std::size_t i = 0; i < idx.size(); ++i) p(static_cast<Eigen::Index>(i), idx[i]) = true;
  return {src, tgt, std::move(p)};
}

bool equal(const XRelMorphism& a, const XRelMorphism& b) {
  return same_object(a.source, b.source) && same_object(a.target, b.target) && a.pairs == b.pairs;
}

bool is_nuclear(const XRelMorphism& r) {
  const auto& m = *r.source.monoid;
  for (int x = 0; x < r.source.size(); ++x) {
    for (int y = 0; y < r.target.size(); ++y) {
      if (!r.pairs(x, y)) continue;
      int dx = r.source.deg(x), dy = r.target.deg(y);
      if (m.mul(dx, dx) != m.e || m.mul(dy, dy) != m.e) return false;
    }
  }
  return true;
}

bool is_nuclear_object(const CrossedMSet& x) {
  for (int i = 0; i < x.size(); ++i) {
    if (x.monoid->mul(x.deg(i), x.deg(i)) != x.monoid->e) return false;
  }
  return true;
}

XRelMorphism theta(const XRelMorphism& r) {
  if (!is_nuclear(r)) throw PreconditionError("theta needs a nuclear morphism (|x|^2 = e on related points)");
  auto tgt = tensor(r.source, r.target);
  BoolMatrix p = BoolMatrix::Zero(1, tgt.size());
  const int ny = r.target.size();
  for (int x = 0; x < r.source.size(); ++x) {
    for (int y = 0; y < ny; ++y) p(0, x * ny + y) = r.pairs(x, y);
  }
  return {unit_object(r.source.monoid), tgt, std::move(p)};
}

XRelMorphism theta_inv(const XRelMorphism& m, const CrossedMSet& x, const CrossedMSet& y) {
  if (m.source.size() != 1 || !same_object(m.target, tensor(x, y))) throw ShapeError("theta inverse needs I -> X x Y");
  BoolMatrix p = BoolMatrix::Zero(x.size(), y.size());
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) p(i, j) = m.pairs(0, i * y.size() + j);
  }
  return {x, y, std::move(p)};
}

std::vector<CrossedMSet> all_objects(const MonoidPtr& m, int n) {
  // Candidate self-maps of {0..n-1}, indexed in base n.
  std::vector<std::vector<int>> maps;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(static_cast<std::size_t>(n));
    int c = code;
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] = c % n;
      c /= n;
    }
    maps.push_back(std::move(f));
  }
  std::vector<int> ident(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ident[static_cast<std::size_t>(i)] = i;
  const int nm = m->size();
  std::vector<std::vector<std::vector<int>>> actions;
  std::vector<std::vector<int>> act(static_cast<std::size_t>(nm));
  std::function<void(int)> assign = [&](int k) {
    if (k == nm) {
      for (int a = 0; a < nm; ++a) {
        for (int b = 0; b < nm; ++b) {
          for (int x = 0; x < n; ++x) {
            auto ab = act[static_cast<std::size_t>(m->mul(a, b))][static_cast<std::size_t>(x)];
            auto seq = act[static_cast<std::size_t>(a)][static_cast<std::size_t>(act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            if (ab != seq) return;
          }
        }
      }
      actions.push_back(act);
      return;
    }
    if (k == m->e) {
      act[static_cast<std::size_t>(k)] = ident;
      assign(k + 1);
      return;
    }
    for (const auto& f : maps) {
      act[static_cast<std::size_t>(k)] = f;
      assign(k + 1);
    }
  };
  assign(0);
  std::vector<CrossedMSet> out;
  for (const auto& a : actions) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::function<void(int)> degs = [&](int x) {
      if (x == n) {
        for (int k = 0; k < nm; ++k) {
          for (int i = 0; i < n; ++i) {
            if (deg[static_cast<std::size_t>(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)])] != deg[static_cast<std::size_t>(i)]) return;
          }
        }
        out.emplace_back(m, FinSet::range(n), a, deg);
        return;
      }
      for (int d = 0; d < nm; ++d) {
        deg[static_cast<std::size_t>(x)] = d;
        degs(x + 1);
      }
    };
    degs(0);
  }
  return out;
}

namespace {

BoolMatrix closure(const CrossedMSet& x, const CrossedMSet& y, BoolMatrix p) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < x.size(); ++i) {
      for (int j = 0; j < y.size(); ++j) {
        if (!p(i, j)) continue;
        for (int m = 0; m < x.monoid->size(); ++m) {
          auto& cell = p(x.act(m, i), y.act(m, j));
          if (!cell) {
            cell = true;
            grew = true;
          }
        }
      }
    }
  }
  return p;
}

}  // namespace

std::vector<XRelMorphism> hom(const CrossedMSet& x, const CrossedMSet& y) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      if (x.deg(i) == y.deg(j)) cells.emplace_back(i, j);
    }
  }
  if (cells.size() > 20) throw ConfigurationError("hom-set too large to enumerate");
  std::vector<XRelMorphism> out;
  for (std::uint32_t mask = 0; mask < (1U << cells.size()); ++mask) {
    BoolMatrix p = BoolMatrix::Zero(x.size(), y.size());
    for (std::size_t k = 0; k < cells.size(); ++k) p(cells[k].first, cells[k].second) = (mask >> k) & 1U;
    if (closure(x, y, p) == p) out.emplace_back(x, y, std::move(p));
  }
  return out;
}

core::AxiomReport theta_bijectivity_report(const CrossedMSet& x, const CrossedMSet& y) {
  const auto start = std::chrono::steady_clock::now();
  core::AxiomReport r;
  r.law = "theta-bijectivity";
  r.instance = "xrel(" + x.monoid->name + ")";
  const auto& m = *x.monoid;
  auto unit = unit_object(x.monoid);
  auto xy = tensor(x, y);
  for (const auto& s : hom(unit, xy)) {
    ++r.cases;
    try {
      auto f = theta_inv(s, x, y);
      if (!is_nuclear(f) || !equal(theta(f), s)) r.add_failure(r.law, "not theta of a nuclear map: " + s.describe(), 100);
    } catch (const InvariantError& e) {
      std::string degs;
      for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) {
          if (s.pairs(0, i * y.size() + j)) {
            degs += " (" + m.elements[static_cast<std::size_t>(x.deg(i))] + "," +
                    m.elements[static_cast<std::size_t>(y.deg(j))] + ")";
          }
        }
      }
      r.add_failure(r.law, "not in the image of theta, degrees" + degs + ": " + e.what(), 100);
    }
  }
  // Injectivity: distinct nuclear morphisms have distinct images.
  auto nuclear = hom(x, y);
  for (std::size_t i = 0; i < nuclear.size(); ++i) {
    if (!is_nuclear(nuclear[i])) continue;
    for (std::size_t j = i + 1; j < nuclear.size(); ++j) {
      if (is_nuclear(nuclear[j]) && equal(theta(nuclear[i]), theta(nuclear[j]))) {
        r.add_failure(r.law, "theta not injective", 100);
      }
    }
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  core::LawStats st;
  st.law = r.law;
  st.cases = r.cases;
  st.failed = r.failed_cases;
  st.exhaustive_size = std::max(x.size(), y.size());
  st.fully_exhaustive = true;
  r.parts.push_back(st);
  return r;
}

Category::Category(CommMonoid m, int max_size) : monoid_(std::make_shared<const CommMonoid>(std::move(m))) {
  for (int n = 0; n <= max_size; ++n) by_size_.push_back(all_objects(monoid_, n));
}

Category::Scalar Category::to_scalar(const Morphism& f) const {
  if (f.source.size() != 1 || f.target.size() != 1) throw ShapeError("scalar needs I -> I");
  return f.pairs(0, 0);
}

Category::Object Category::sample_object(core::Lcg& rng, int max_size) const {
  int n = rng.range(0, std::min(max_size, static_cast<int>(by_size_.size()) - 1));
  const auto& pool = by_size_[static_cast<std::size_t>(n)];
  return pool[rng.below(pool.size())];
}

Category::Morphism Category::sample_pairs(core::Lcg& rng, const Object& a, const Object& b, bool nuclear_only) const {
  const auto& m = *monoid_;
  BoolMatrix p = BoolMatrix::Zero(a.size(), b.size());
  const std::uint64_t density = rng.below(4);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      if (a.deg(i) != b.deg(j)) continue;
      if (nuclear_only && m.mul(a.deg(i), a.deg(i)) != m.e) continue;
      p(i, j) = rng.below(6) < density;
    }
  }
  return {a, b, closure(a, b, std::move(p))};
}

Category::Morphism Category::sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const {
  return sample_pairs(rng, a, b, false);
}

Category::Morphism Category::sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const {
  return sample_pairs(rng, a, b, true);
}

}  // namespace nucleal::xrel
