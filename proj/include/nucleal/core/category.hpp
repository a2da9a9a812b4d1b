#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nucleal/core/rng.hpp"

namespace nucleal::core {

/// A tensored *-category given as a bundle of pure functions.
///
/// Composition is written compose(g, f) = g after f. The monoidal structure
/// is strict: tensor(A, unit()) is the same object as A.
template <class C>
concept TensoredStarCategory = requires(const C& c, const typename C::Object& a, const typename C::Morphism& f,
                                        const typename C::Scalar& s, Lcg& rng) {
  typename C::Object;
  typename C::Morphism;
  typename C::Scalar;
  { c.name() } -> std::convertible_to<std::string>;
  { c.unit() } -> std::same_as<typename C::Object>;
  { c.tensor(a, a) } -> std::same_as<typename C::Object>;
  { c.tensor(f, f) } -> std::same_as<typename C::Morphism>;
  { c.conj(a) } -> std::same_as<typename C::Object>;
  { c.conj(f) } -> std::same_as<typename C::Morphism>;
  { c.same(a, a) } -> std::same_as<bool>;
  { c.source(f) } -> std::same_as<typename C::Object>;
  { c.target(f) } -> std::same_as<typename C::Object>;
  { c.identity(a) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.symmetry(a, a) } -> std::same_as<typename C::Morphism>;
  { c.star(f) } -> std::same_as<typename C::Morphism>;
  { c.iota() } -> std::same_as<typename C::Morphism>;
  { c.iota_inv() } -> std::same_as<typename C::Morphism>;
  { c.equal(f, f) } -> std::same_as<bool>;
  { c.describe(f) } -> std::convertible_to<std::string>;
  { c.describe(a) } -> std::convertible_to<std::string>;
  { c.to_scalar(f) } -> std::same_as<typename C::Scalar>;
  { c.scalar_equal(s, s) } -> std::same_as<bool>;
  { c.scalar_star(s) } -> std::same_as<typename C::Scalar>;
  { c.scalar_mul(s, s) } -> std::same_as<typename C::Scalar>;
  { c.describe_scalar(s) } -> std::convertible_to<std::string>;
  { c.sample_object(rng, 1) } -> std::same_as<typename C::Object>;
  { c.sample_morphism(rng, a, a) } -> std::same_as<typename C::Morphism>;
};

/// Finite hom-sets that can be listed, for exhaustive checking.
template <class C>
concept Enumerable = TensoredStarCategory<C> && requires(const C& c, const typename C::Object& a) {
  { c.objects_up_to(1) } -> std::same_as<std::vector<typename C::Object>>;
  { c.morphism_count(a, a) } -> std::convertible_to<double>;
  { c.morphisms(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
};

template <class C>
concept HasNuclearIdeal = TensoredStarCategory<C> && requires(const C& c, const typename C::Object& a,
                                                               const typename C::Morphism& f) {
  { c.is_nuclear(f) } -> std::same_as<bool>;
  { c.theta(f) } -> std::same_as<typename C::Morphism>;
  { c.theta_inv(f, a, a) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept SamplesNuclear = HasNuclearIdeal<C> && requires(const C& c, Lcg& rng, const typename C::Object& a) {
  { c.sample_nuclear(rng, a, a) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept HasTraceIdeal = TensoredStarCategory<C> && requires(const C& c, const typename C::Morphism& f) {
  { c.in_trace_class(f) } -> std::same_as<bool>;
  { c.trace(f) } -> std::same_as<typename C::Scalar>;
};

template <class C>
concept SamplesTraceClass = HasTraceIdeal<C> && requires(const C& c, Lcg& rng, const typename C::Object& a) {
  { c.sample_trace_class(rng, a) } -> std::same_as<typename C::Morphism>;
};

/// Parametrized trace tr^U : I^U_{A,B} -> Hom(A, B).
template <class C>
concept HasParamTrace = TensoredStarCategory<C> && requires(const C& c, const typename C::Object& a,
                                                             const typename C::Morphism& f) {
  { c.param_member(f, a, a, a) } -> std::same_as<bool>;
  { c.param_trace(f, a, a, a) } -> std::same_as<typename C::Morphism>;
  { C::unconditional_yanking } -> std::convertible_to<bool>;
};

/// Canonical nuclear factorization h = g after f, if the instance has one.
template <class C>
concept Factorizes = HasNuclearIdeal<C> && requires(const C& c, const typename C::Morphism& h) {
  { c.factorize(h) } -> std::same_as<std::optional<std::pair<typename C::Morphism, typename C::Morphism>>>;
};

/// Random isomorphism m : B -> B' with its inverse.
template <class C>
concept SamplesIso = TensoredStarCategory<C> && requires(const C& c, Lcg& rng, const typename C::Object& a) {
  {
    c.sample_iso(rng, a)
  } -> std::same_as<std::tuple<typename C::Object, typename C::Morphism, typename C::Morphism>>;
};

}  // namespace nucleal::core
