#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nucleal/core/rng.hpp"
#include "nucleal/finset.hpp"

namespace nucleal::pinj {

/// Partial injective function X -> Y. map[x] is the image index or -1.
struct PartialInjection {
  FinSet source;
  FinSet target;
  std::vector<int> map;

  PartialInjection() = default;
  PartialInjection(FinSet s, FinSet t, std::vector<int> m);  // validates injectivity
  PartialInjection(FinSet s, FinSet t);                      // empty map

  [[nodiscard]] bool defined(int x) const { return map[static_cast<std::size_t>(x)] >= 0; }
  [[nodiscard]] int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
  [[nodiscard]] int domain_size() const;
  [[nodiscard]] std::string describe() const;
};

FinSet unit();

/// f then g.
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);
PartialInjection identity(const FinSet& x);
PartialInjection converse(const PartialInjection& f);
PartialInjection tensor(const PartialInjection& f, const PartialInjection& g);
PartialInjection symmetry(const FinSet& x, const FinSet& y);
bool equal(const PartialInjection& f, const PartialInjection& g);

/// |Dom(f)| <= 1.
bool is_nuclear(const PartialInjection& f);
/// {x -> y} becomes {* -> (x, y)}; throws PreconditionError if not nuclear.
PartialInjection theta(const PartialInjection& f);
PartialInjection theta_inv(const PartialInjection& m, const FinSet& x, const FinSet& y);

/// id when f has a single domain point that it fixes, empty otherwise.
bool trace(const PartialInjection& f);

/// For f : X x U -> Y, each x meets Dom(f) in at most one u.
bool is_u_nuclear(const PartialInjection& f, const FinSet& x, const FinSet& u);
/// Membership in I^U_{A,B}: the U-nuclear condition on the domain of
/// f : A x U -> B x U and on its image.
bool param_member(const PartialInjection& f, const FinSet& a, const FinSet& b, const FinSet& u);
/// tr(f)(a) = b when f(a, u) = (b, u). Throws PreconditionError outside
/// I^U_{A,B} and InvariantError if the result is not injective.
PartialInjection param_trace(const PartialInjection& f, const FinSet& a, const FinSet& b, const FinSet& u);

/// Partial injections and the cardinality-at-most-one nuclear ideal.
class Category {
 public:
  using Object = FinSet;
  using Morphism = PartialInjection;
  using Scalar = bool;
  static constexpr bool unconditional_yanking = false;

  std::string name() const { return "pinj"; }
  Object unit() const { return pinj::unit(); }
  Object tensor(const Object& a, const Object& b) const { return product(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return pinj::tensor(f, g); }
  Object conj(const Object& a) const { return a; }
  Morphism conj(const Morphism& f) const { return f; }
  bool same(const Object& a, const Object& b) const { return a.size() == b.size(); }
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return pinj::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return pinj::compose(f, g); }
  Morphism symmetry(const Object& a, const Object& b) const { return pinj::symmetry(a, b); }
  Morphism star(const Morphism& f) const { return converse(f); }
  Morphism iota() const { return pinj::identity(unit()); }
  Morphism iota_inv() const { return pinj::identity(unit()); }
  bool equal(const Morphism& f, const Morphism& g) const { return pinj::equal(f, g); }
  std::string describe(const Morphism& f) const { return f.describe(); }
  std::string describe(const Object& a) const { return std::to_string(a.size()); }
  Scalar to_scalar(const Morphism& f) const;
  bool scalar_equal(Scalar a, Scalar b) const { return a == b; }
  Scalar scalar_star(Scalar a) const { return a; }
  Scalar scalar_mul(Scalar a, Scalar b) const { return a && b; }
  std::string describe_scalar(Scalar a) const { return a ? "id" : "empty"; }

  Object sample_object(core::Lcg& rng, int max_size) const { return FinSet::range(rng.range(0, max_size)); }
  Morphism sample_morphism(core::Lcg& rng, const Object& a, const Object& b) const;
  Morphism sample_nuclear(core::Lcg& rng, const Object& a, const Object& b) const;

  std::vector<Object> objects_up_to(int n) const;
  double morphism_count(const Object& a, const Object& b) const;
  std::vector<Morphism> morphisms(const Object& a, const Object& b) const;

  bool is_nuclear(const Morphism& f) const { return pinj::is_nuclear(f); }
  Morphism theta(const Morphism& f) const { return pinj::theta(f); }
  Morphism theta_inv(const Morphism& m, const Object& a, const Object& b) const { return pinj::theta_inv(m, a, b); }
  /// Through the empty set for the empty map, through the point otherwise.
  std::optional<std::pair<Morphism, Morphism>> factorize(const Morphism& h) const;
  std::tuple<Object, Morphism, Morphism> sample_iso(core::Lcg& rng, const Object& b) const;

  bool in_trace_class(const Morphism& h) const { return h.source.size() == h.target.size() && is_nuclear(h); }
  Scalar trace(const Morphism& h) const { return pinj::trace(h); }

  bool param_member(const Morphism& f, const Object& a, const Object& b, const Object& u) const {
    return pinj::param_member(f, a, b, u);
  }
  Morphism param_trace(const Morphism& f, const Object& a, const Object& b, const Object& u) const {
    return pinj::param_trace(f, a, b, u);
  }
};

}  // namespace nucleal::pinj
