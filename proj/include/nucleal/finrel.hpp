#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nucleal/core/rng.hpp"
#include "nucleal/finset.hpp"

namespace nucleal::finrel {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Relation X -> Y as a boolean matrix, rows indexed by X.
struct Relation {
  FinSet source;
  FinSet target;
  BoolMatrix pairs;

  Relation() = default;
  Relation(FinSet s, FinSet t, BoolMatrix p);
  Relation(FinSet s, FinSet t);  // empty relation

  [[nodiscard]] bool holds(int x, int y) const { return pairs(x, y); }
  [[nodiscard]] std::string describe() const;
};

FinSet unit();

/// r then s: x (r;s) z iff some y has x r y and y s z.
Relation compose(const Relation& r, const Relation& s);
Relation identity(const FinSet& x);
Relation converse(const Relation& r);
Relation tensor(const Relation& r, const Relation& s);
Relation symmetry(const FinSet& x, const FinSet& y);

/// Unit I -> X x X relating * to every (x, x).
Relation nu(const FinSet& x);
/// Counit X x X -> I.
Relation psi(const FinSet& x);

/// True iff some x has x r x.
bool trace_endo(const Relation& r);

/// a tr(r) b iff some u has (a, u) r (b, u), for r : A x U -> B x U.
Relation param_trace(const Relation& r, const FinSet& a, const FinSet& b, const FinSet& u);

/// I -> X x Y re-indexing of the graph, and back.
Relation theta(const Relation& r);
Relation theta_inv(const Relation& m, const FinSet& x, const FinSet& y);

bool equal(const Relation& a, const Relation& b);

/// The compact closed category of finite sets and relations, packaged for
/// the generic harness. Objects are compared by cardinality.
class Category {
 public:
  using Object = FinSet;
  using Morphism = Relation;
  using Scalar = bool;
  static constexpr bool unconditional_yanking = true;

  std::string name() const { return "finrel"; }
  Object unit() const { return finrel::unit(); }
  Object tensor(const Object& a, const Object& b) const { return product(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return finrel::tensor(f, g); }
  Object conj(const Object& a) const { return a; }
  Morphism conj(const Morphism& f) const { return f; }
  bool same(const Object& a, const Object& b) const { return a.size() == b.size(); }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return finrel::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return finrel::compose(f, g); }
  Morphism symmetry(const Object& a, const Object& b) const { return finrel::symmetry(a, b); }
  Morphism star(const Morphism& f) const { return converse(f); }
  Morphism iota() const { return finrel::identity(unit()); }
  Morphism iota_inv() const { return finrel::identity(unit()); }
  bool equal(const Morphism& f, const Morphism& g) const { return finrel::equal(f, g); }
  std::string describe(const Morphism& f) const { return f.describe(); }
  std::string describe(const Object& a) const { return std::to_string(a.size()); }
  Scalar to_scalar(const Morphism& f) const;
  bool scalar_equal(Scalar a, Scalar b) const { return a == b; }
  Scalar scalar_star(Scalar a) const { return a; }
  Scalar scalar_mul(Scalar a, Scalar b) const { return a && b; }
  std::string describe_scalar(Scalar a) const { return a ? "id" : "empty"; }

  Object sample_object(core::Lcg& rng, int max_size) const { return FinSet::range(rng.range(0, max_size)); }
  Morphism sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const;

  std::vector<Object> objects_up_to(int n) const;
  double morphism_count(const Object& a, const Object& b) const;
  std::vector<Morphism> morphisms(const Object& a, const Object& b) const;

  bool is_nuclear(const Morphism&) const { return true; }
  Morphism theta(const Morphism& f) const { return finrel::theta(f); }
  Morphism theta_inv(const Morphism& m, const Object& a, const Object& b) const { return finrel::theta_inv(m, a, b); }
  std::optional<std::pair<Morphism, Morphism>> factorize(const Morphism& h) const {
    return std::make_pair(h, finrel::identity(h.target));
  }
  std::tuple<Object, Morphism, Morphism> sample_iso(core::Lcg& rng, const Object& b) const;

  bool in_trace_class(const Morphism& h) const { return h.source.size() == h.target.size(); }
  Scalar trace(const Morphism& h) const { return trace_endo(h); }

  bool param_member(const Morphism& f, const Object& a, const Object& b, const Object& u) const;
  Morphism param_trace(const Morphism& f, const Object& a, const Object& b, const Object& u) const {
    return finrel::param_trace(f, a, b, u);
  }
};

}  // namespace nucleal::finrel
