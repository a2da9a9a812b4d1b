#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nucleal/core/report.hpp"
#include "nucleal/core/rng.hpp"
#include "nucleal/finset.hpp"

namespace nucleal::xrel {

/// Finite commutative monoid given by its multiplication table.
struct CommMonoid {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int e = 0;
  std::string name;

  CommMonoid() = default;
  /// Validates associativity, commutativity and the unit.
  CommMonoid(std::vector<std::string> els, std::vector<std::vector<int>> tab, int unit, std::string label = {});
  /// Z/n under addition, e = 0.
  static CommMonoid cyclic(int n);

  [[nodiscard]] int size() const { return static_cast<int>(elements.size()); }
  [[nodiscard]] int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  friend bool operator==(const CommMonoid&, const CommMonoid&) = default;
};

using MonoidPtr = std::shared_ptr<const CommMonoid>;

/// Crossed M-set: an M-action with a degree map |.| : X -> M, |mx| = |x|.
struct CrossedMSet {
  MonoidPtr monoid;
  FinSet carrier;
  std::vector<std::vector<int>> action;  // action[m][x]
  std::vector<int> degree;

  CrossedMSet() = default;
  CrossedMSet(MonoidPtr m, FinSet c, std::vector<std::vector<int>> act, std::vector<int> deg);  // validates

  [[nodiscard]] int size() const { return carrier.size(); }
  [[nodiscard]] int act(int m, int x) const { return action[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)]; }
  [[nodiscard]] int deg(int x) const { return degree[static_cast<std::size_t>(x)]; }
  [[nodiscard]] std::string describe() const;
};

bool same_object(const CrossedMSet& a, const CrossedMSet& b);

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Equivariant, degree-preserving relation.
struct XRelMorphism {
  CrossedMSet source;
  CrossedMSet target;
  BoolMatrix pairs;

  XRelMorphism() = default;
  XRelMorphism(CrossedMSet s, CrossedMSet t, BoolMatrix p);  // validates both invariants
  [[nodiscard]] std::string describe() const;
};

CrossedMSet unit_object(const MonoidPtr& m);
CrossedMSet tensor(const CrossedMSet& a, const CrossedMSet& b);

/// r then s.
XRelMorphism compose(const XRelMorphism& r, const XRelMorphism& s);
XRelMorphism identity(const CrossedMSet& x);
XRelMorphism converse(const XRelMorphism& r);
XRelMorphism tensor(const XRelMorphism& r, const XRelMorphism& s);
XRelMorphism symmetry(const CrossedMSet& x, const CrossedMSet& y);
bool equal(const XRelMorphism& a, const XRelMorphism& b);

/// xRy implies |x|^2 = |y|^2 = e.
bool is_nuclear(const XRelMorphism& r);
/// |x|^2 = e for every x.
bool is_nuclear_object(const CrossedMSet& x);
XRelMorphism theta(const XRelMorphism& r);
/// Throws InvariantError when the pairs do not form a morphism X -> Y.
XRelMorphism theta_inv(const XRelMorphism& m, const CrossedMSet& x, const CrossedMSet& y);

/// All crossed M-sets with carrier {0..n-1}.
std::vector<CrossedMSet> all_objects(const MonoidPtr& m, int n);
/// All morphisms X -> Y (action-closed, degree-matched relations).
std::vector<XRelMorphism> hom(const CrossedMSet& x, const CrossedMSet& y);

/// Enumerates Hom(I, X x Y) and checks that every member is theta of a
/// nuclear morphism.
core::AxiomReport theta_bijectivity_report(const CrossedMSet& x, const CrossedMSet& y);

/// Crossed M-sets and equivariant relations over a fixed monoid.
class Category {
 public:
  using Object = CrossedMSet;
  using Morphism = XRelMorphism;
  using Scalar = bool;

  explicit Category(CommMonoid m, int max_size = 3);

  std::string name() const { return "xrel(" + monoid_->name + ")"; }
  const MonoidPtr& monoid() const { return monoid_; }
  Object unit() const { return unit_object(monoid_); }
  Object tensor(const Object& a, const Object& b) const { return xrel::tensor(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return xrel::tensor(f, g); }
  Object conj(const Object& a) const { return a; }
  Morphism conj(const Morphism& f) const { return f; }
  bool same(const Object& a, const Object& b) const { return same_object(a, b); }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return xrel::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return xrel::compose(f, g); }
  Morphism symmetry(const Object& a, const Object& b) const { return xrel::symmetry(a, b); }
  Morphism star(const Morphism& f) const { return converse(f); }
  Morphism iota() const { return xrel::identity(unit()); }
  Morphism iota_inv() const { return xrel::identity(unit()); }
  bool equal(const Morphism& f, const Morphism& g) const { return xrel::equal(f, g); }
  std::string describe(const Morphism& f) const { return f.describe(); }
  std::string describe(const Object& a) const { return a.describe(); }
  Scalar to_scalar(const Morphism& f) const;
  bool scalar_equal(Scalar a, Scalar b) const { return a == b; }
  Scalar scalar_star(Scalar a) const { return a; }
  Scalar scalar_mul(Scalar a, Scalar b) const { return a && b; }
  std::string describe_scalar(Scalar a) const { return a ? "id" : "empty"; }

  Object sample_object(core::Lcg& rng, int max_size) const;
  Morphism sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const;
  Morphism sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const;

  bool is_nuclear(const Morphism& f) const { return xrel::is_nuclear(f); }
  Morphism theta(const Morphism& f) const { return xrel::theta(f); }
  Morphism theta_inv(const Morphism& m, const Object& a, const Object& b) const { return xrel::theta_inv(m, a, b); }

 private:
  Morphism sample_pairs(core::Lcg& rng, const Object& a, const Object& b, bool nuclear_only) const;

  MonoidPtr monoid_;
  std::vector<std::vector<CrossedMSet>> by_size_;
};

}  // namespace nucleal::xrel
