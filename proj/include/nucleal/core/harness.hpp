#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nucleal/core/cases.hpp"
#include "nucleal/core/category.hpp"
#include "nucleal/core/error.hpp"
#include "nucleal/core/report.hpp"

namespace nucleal::core {

namespace laws {

template <class C>
std::string show(const C& cat, const typename C::Morphism& f) {
  return cat.describe(f);
}

template <class C>
Outcome same_morphism(const C& cat, const typename C::Morphism& lhs, const typename C::Morphism& rhs,
                      const std::string& what) {
  if (!cat.same(cat.source(lhs), cat.source(rhs)) || !cat.same(cat.target(lhs), cat.target(rhs))) {
    return Outcome::fail(what + ": types differ, " + cat.describe(cat.source(lhs)) + "->" +
                         cat.describe(cat.target(lhs)) + " vs " + cat.describe(cat.source(rhs)) + "->" +
                         cat.describe(cat.target(rhs)));
  }
  if (cat.equal(lhs, rhs)) return Outcome::pass();
  return Outcome::fail(what + ": " + show(cat, lhs) + " != " + show(cat, rhs));
}

/// First failing outcome of a list, else pass.
inline Outcome all_of(std::initializer_list<Outcome> outs) {
  for (const auto& o : outs) {
    if (o.status == Outcome::Fail) return o;
  }
  return Outcome::pass();
}

}  // namespace laws

/// Monoidal-category laws: associativity, units, functoriality of the tensor,
/// naturality and involutivity of the symmetry, the hexagon, strict units.
template <TensoredStarCategory C>
AxiomReport check_category_laws(const C& cat, const RunConfig& cfg) {
  using laws::same_morphism;
  AxiomReport r;
  r.law = "category-laws";
  r.instance = cat.name();
  run_law(cat, "associativity", {4, {{{0}, {1}}, {{1}, {2}}, {{2}, {3}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1], &h = c.mor[2];
            return same_morphism(cat, cat.compose(h, cat.compose(g, f)), cat.compose(cat.compose(h, g), f),
                                 "h(gf) = (hg)f");
          },
          cfg, r);
  run_law(cat, "identity", {2, {{{0}, {1}}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            return laws::all_of({same_morphism(cat, cat.compose(f, cat.identity(c.obj[0])), f, "f id = f"),
                                 same_morphism(cat, cat.compose(cat.identity(c.obj[1]), f), f, "id f = f")});
          },
          cfg, r);
  run_law(cat, "tensor-interchange", {6, {{{0}, {1}}, {{1}, {2}}, {{3}, {4}}, {{4}, {5}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1], &f2 = c.mor[2], &g2 = c.mor[3];
            return same_morphism(cat, cat.compose(cat.tensor(g, g2), cat.tensor(f, f2)),
                                 cat.tensor(cat.compose(g, f), cat.compose(g2, f2)), "(g x g')(f x f') = gf x g'f'");
          },
          cfg, r);
  run_law(cat, "tensor-identity", {2, {}},
          [&](const Case<C>& c) {
            return same_morphism(cat, cat.tensor(cat.identity(c.obj[0]), cat.identity(c.obj[1])),
                                 cat.identity(cat.tensor(c.obj[0], c.obj[1])), "id x id = id");
          },
          cfg, r);
  run_law(cat, "symmetry-naturality", {4, {{{0}, {1}}, {{2}, {3}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            return same_morphism(cat, cat.compose(cat.symmetry(c.obj[1], c.obj[3]), cat.tensor(f, g)),
                                 cat.compose(cat.tensor(g, f), cat.symmetry(c.obj[0], c.obj[2])),
                                 "c (f x g) = (g x f) c");
          },
          cfg, r);
  run_law(cat, "symmetry-involution", {2, {}},
          [&](const Case<C>& c) {
            const auto &a = c.obj[0], &b = c.obj[1];
            return same_morphism(cat, cat.compose(cat.symmetry(b, a), cat.symmetry(a, b)),
                                 cat.identity(cat.tensor(a, b)), "c_BA c_AB = id");
          },
          cfg, r);
  run_law(cat, "hexagon", {3, {}},
          [&](const Case<C>& c) {
            const auto &a = c.obj[0], &b = c.obj[1], &d = c.obj[2];
            auto lhs = cat.symmetry(a, cat.tensor(b, d));
            auto rhs = cat.compose(cat.tensor(cat.identity(b), cat.symmetry(a, d)),
                                   cat.tensor(cat.symmetry(a, b), cat.identity(d)));
            return same_morphism(cat, lhs, rhs, "c_{A,BC} = (id_B x c_AC)(c_AB x id_C)");
          },
          cfg, r);
  run_law(cat, "unit", {2, {{{0}, {1}}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            auto i = cat.identity(cat.unit());
            if (!cat.same(cat.tensor(c.obj[0], cat.unit()), c.obj[0]) ||
                !cat.same(cat.tensor(cat.unit(), c.obj[0]), c.obj[0])) {
              return Outcome::fail("A x I != A");
            }
            return laws::all_of({same_morphism(cat, cat.tensor(f, i), f, "f x id_I = f"),
                                 same_morphism(cat, cat.tensor(i, f), f, "id_I x f = f"),
                                 same_morphism(cat, cat.symmetry(c.obj[0], cat.unit()), cat.identity(c.obj[0]),
                                               "c_{A,I} = id")});
          },
          cfg, r);
  return r;
}

/// Star and conjugation laws of a tensored *-category.
template <TensoredStarCategory C>
AxiomReport check_star_laws(const C& cat, const RunConfig& cfg) {
  using laws::same_morphism;
  AxiomReport r;
  r.law = "star-laws";
  r.instance = cat.name();
  run_law(cat, "star-involution", {2, {{{0}, {1}}}},
          [&](const Case<C>& c) { return same_morphism(cat, cat.star(cat.star(c.mor[0])), c.mor[0], "f** = f"); },
          cfg, r);
  run_law(cat, "star-contravariant", {3, {{{0}, {1}}, {{1}, {2}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            return same_morphism(cat, cat.star(cat.compose(g, f)), cat.compose(cat.star(f), cat.star(g)),
                                 "(gf)* = f* g*");
          },
          cfg, r);
  run_law(cat, "star-tensor", {4, {{{0}, {1}}, {{2}, {3}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            return same_morphism(cat, cat.star(cat.tensor(f, g)), cat.tensor(cat.star(f), cat.star(g)),
                                 "(f x g)* = f* x g*");
          },
          cfg, r);
  run_law(cat, "star-identity", {1, {}},
          [&](const Case<C>& c) {
            auto id = cat.identity(c.obj[0]);
            return same_morphism(cat, cat.star(id), id, "id* = id");
          },
          cfg, r);
  run_law(cat, "star-symmetry", {2, {}},
          [&](const Case<C>& c) {
            const auto &a = c.obj[0], &b = c.obj[1];
            return same_morphism(cat, cat.star(cat.symmetry(a, b)), cat.symmetry(b, a), "c_AB* = c_BA");
          },
          cfg, r);
  run_law(cat, "conj-objects", {2, {}},
          [&](const Case<C>& c) {
            const auto &a = c.obj[0], &b = c.obj[1];
            bool ok = cat.same(cat.conj(cat.conj(a)), a) &&
                      cat.same(cat.conj(cat.tensor(a, b)), cat.tensor(cat.conj(a), cat.conj(b))) &&
                      cat.same(cat.conj(cat.unit()), cat.unit());
            return Outcome::check(ok, "conjugation on objects is not an involutive tensor map");
          },
          cfg, r);
  run_law(cat, "conj-involution", {2, {{{0}, {1}}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            return laws::all_of({same_morphism(cat, cat.conj(cat.conj(f)), f, "conj conj f = f"),
                                 same_morphism(cat, cat.conj(cat.star(f)), cat.star(cat.conj(f)),
                                               "conj(f*) = conj(f)*")});
          },
          cfg, r);
  run_law(cat, "conj-functor", {3, {{{0}, {1}}, {{1}, {2}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            return laws::all_of({same_morphism(cat, cat.conj(cat.compose(g, f)), cat.compose(cat.conj(g), cat.conj(f)),
                                               "conj(gf) = conj g conj f"),
                                 same_morphism(cat, cat.conj(cat.identity(c.obj[0])),
                                               cat.identity(cat.conj(c.obj[0])), "conj id = id")});
          },
          cfg, r);
  run_law(cat, "conj-tensor", {4, {{{0}, {1}}, {{2}, {3}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            return laws::all_of({same_morphism(cat, cat.conj(cat.tensor(f, g)), cat.tensor(cat.conj(f), cat.conj(g)),
                                               "conj(f x g) = conj f x conj g"),
                                 same_morphism(cat, cat.conj(cat.symmetry(c.obj[0], c.obj[2])),
                                               cat.symmetry(cat.conj(c.obj[0]), cat.conj(c.obj[2])),
                                               "conj c = c")});
          },
          cfg, r);
  run_law(cat, "scalar-square", {0, {{{}, {}}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            return laws::all_of(
                {same_morphism(cat, cat.star(f), cat.compose(cat.iota_inv(), cat.compose(cat.conj(f), cat.iota())),
                               "f* = iota^-1 conj(f) iota"),
                 same_morphism(cat, cat.compose(cat.iota_inv(), cat.iota()), cat.identity(cat.unit()),
                               "iota^-1 iota = id")});
          },
          cfg, r);
  return r;
}

struct NuclearOptions {
  bool check_surjectivity = true;  // theta(theta_inv(m)) = m for every m : I -> conj(A) x B
};

/// Nuclear-ideal axioms: closure, theta bijection, theta against tensor and
/// conjugation, naturality and compactness.
template <HasNuclearIdeal C>
AxiomReport check_nuclear_axioms(const C& cat, const RunConfig& cfg, NuclearOptions opt = {}) {
  using laws::same_morphism;
  AxiomReport r;
  r.law = "nuclear-axioms";
  r.instance = cat.name();
  auto nuc = [&](const typename C::Morphism& m, const std::string& what) {
    return Outcome::check(cat.is_nuclear(m), what + " not nuclear: " + cat.describe(m));
  };
  run_law(cat, "ideal-compose", {3, {{{0}, {1}, Kind::Nuclear}, {{1}, {2}}, {{2}, {0}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1], &h = c.mor[2];
            return laws::all_of({nuc(cat.compose(g, f), "g f"), nuc(cat.compose(f, h), "f h")});
          },
          cfg, r);
  run_law(cat, "ideal-tensor", {4, {{{0}, {1}, Kind::Nuclear}, {{2}, {3}, Kind::Nuclear}}},
          [&](const Case<C>& c) { return nuc(cat.tensor(c.mor[0], c.mor[1]), "f x g"); }, cfg, r);
  run_law(cat, "ideal-star-conj", {2, {{{0}, {1}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            return laws::all_of({nuc(cat.star(c.mor[0]), "f*"), nuc(cat.conj(c.mor[0]), "conj f")});
          },
          cfg, r);
  run_law(cat, "theta-roundtrip", {2, {{{0}, {1}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            auto t = cat.theta(f);
            if (!cat.same(cat.source(t), cat.unit()) ||
                !cat.same(cat.target(t), cat.tensor(cat.conj(c.obj[0]), c.obj[1]))) {
              return Outcome::fail("theta(f) is not I -> conj(A) x B");
            }
            return same_morphism(cat, cat.theta_inv(t, c.obj[0], c.obj[1]), f, "theta^-1 theta f = f");
          },
          cfg, r);
  if (opt.check_surjectivity) {
    run_law(cat, "theta-surjective", {2, {{{}, {conj_of(0), 1}}}},
            [&](const Case<C>& c) {
              const auto& m = c.mor[0];
              auto f = cat.theta_inv(m, c.obj[0], c.obj[1]);
              return laws::all_of({nuc(f, "theta^-1 m"), same_morphism(cat, cat.theta(f), m, "theta theta^-1 m = m")});
            },
            cfg, r);
  }
  run_law(cat, "theta-tensor", {4, {{{0}, {1}, Kind::Nuclear}, {{2}, {3}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            const auto &a = c.obj[0], &b = c.obj[1], &cc = c.obj[2], &d = c.obj[3];
            auto middle = cat.tensor(cat.tensor(cat.identity(cat.conj(a)), cat.symmetry(b, cat.conj(cc))),
                                     cat.identity(d));
            return same_morphism(cat, cat.theta(cat.tensor(f, g)),
                                 cat.compose(middle, cat.tensor(cat.theta(f), cat.theta(g))),
                                 "theta(f x g) = (id x c x id)(theta f x theta g)");
          },
          cfg, r);
  run_law(cat, "theta-conj", {2, {{{0}, {1}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            auto lhs = cat.theta(cat.conj(f));
            auto via_star = cat.compose(cat.symmetry(cat.conj(c.obj[1]), c.obj[0]), cat.theta(cat.star(f)));
            auto via_conj = cat.compose(cat.conj(cat.theta(f)), cat.iota());
            return laws::all_of({same_morphism(cat, lhs, via_star, "theta(conj f) = c theta(f*)"),
                                 same_morphism(cat, lhs, via_conj, "theta(conj f) = conj(theta f) iota")});
          },
          cfg, r);
  run_law(cat, "naturality", {4, {{{0}, {2}, Kind::Nuclear}, {{0}, {1}}, {{2}, {3}}}},
          [&](const Case<C>& c) {
            const auto &h = c.mor[0], &f = c.mor[1], &g = c.mor[2];
            auto lhs = cat.theta(cat.compose(g, cat.compose(h, cat.star(f))));
            auto rhs = cat.compose(cat.tensor(cat.conj(f), g), cat.theta(h));
            return same_morphism(cat, lhs, rhs, "theta(g h f*) = (conj f x g) theta(h)");
          },
          cfg, r);
  run_law(cat, "compactness", {3, {{{0}, {1}, Kind::Nuclear}, {{1}, {2}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            const auto &a = c.obj[0], &b = c.obj[1], &cc = c.obj[2];
            auto step1 = cat.tensor(cat.theta(g), cat.identity(a));
            auto step2 = cat.tensor(cat.symmetry(cat.conj(b), cc), cat.identity(a));
            auto step3 = cat.tensor(cat.identity(cc), cat.star(cat.theta(cat.star(f))));
            return same_morphism(cat, cat.compose(step3, cat.compose(step2, step1)), cat.compose(g, f),
                                 "(id x theta(f*)*)(c x id)(theta g x id) = g f");
          },
          cfg, r);
  return r;
}

/// theta(g*)* theta(f) for nuclear f : A -> B, g : B -> A.
template <HasNuclearIdeal C>
typename C::Scalar derive_trace(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!cat.is_nuclear(f) || !cat.is_nuclear(g)) throw PreconditionError("derive_trace needs nuclear arguments");
  if (!cat.same(cat.target(f), cat.source(g)) || !cat.same(cat.target(g), cat.source(f))) {
    throw ShapeError("derive_trace needs f : A -> B and g : B -> A");
  }
  return cat.to_scalar(cat.compose(cat.star(cat.theta(cat.star(g))), cat.theta(f)));
}

template <HasNuclearIdeal C>
AxiomReport check_sliding(const C& cat, const RunConfig& cfg) {
  AxiomReport r;
  r.law = "sliding";
  r.instance = cat.name();
  run_law(cat, "sliding", {2, {{{0}, {1}, Kind::Nuclear}, {{1}, {0}, Kind::Nuclear}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            auto lhs = cat.to_scalar(cat.compose(cat.star(cat.theta(cat.star(g))), cat.theta(f)));
            auto rhs = cat.to_scalar(cat.compose(cat.star(cat.theta(cat.star(f))), cat.theta(g)));
            return Outcome::check(cat.scalar_equal(lhs, rhs), "theta(g*)* theta(f) = " + cat.describe_scalar(lhs) +
                                                                  " but theta(f*)* theta(g) = " +
                                                                  cat.describe_scalar(rhs));
          },
          cfg, r);
  return r;
}

/// Result of a bounded search for h = g f with f, g nuclear.
template <class C>
struct Factorization {
  std::optional<std::pair<typename C::Morphism, typename C::Morphism>> fg;  // (f, g)
  std::optional<typename C::Object> middle;
  bool inconclusive = false;
};

/// Looks for a nuclear factorization of h through an object of size <= bound.
/// Uses the instance's own factorization when it has one.
template <HasNuclearIdeal C>
Factorization<C> find_nuclear_factorization(const C& cat, const typename C::Morphism& h, int bound) {
  Factorization<C> out;
  if constexpr (Factorizes<C>) {
    auto fg = cat.factorize(h);
    if (fg) {
      out.middle = cat.target(fg->first);
      out.fg = std::move(fg);
      return out;
    }
  }
  if constexpr (Enumerable<C>) {
    const auto a = cat.source(h);
    const auto b = cat.target(h);
    for (const auto& m : cat.objects_up_to(bound)) {
      std::vector<typename C::Morphism> fs, gs;
      for (auto& f : cat.morphisms(a, m)) {
        if (cat.is_nuclear(f)) fs.push_back(std::move(f));
      }
      for (auto& g : cat.morphisms(m, b)) {
        if (cat.is_nuclear(g)) gs.push_back(std::move(g));
      }
      for (const auto& f : fs) {
        for (const auto& g : gs) {
          if (cat.equal(cat.compose(g, f), h)) {
            out.fg = std::make_pair(f, g);
            out.middle = m;
            return out;
          }
        }
      }
    }
    return out;
  } else {
    if constexpr (!Factorizes<C>) out.inconclusive = true;
    return out;
  }
}

/// Factorization independence of derive_trace. Two nuclear factorizations of
/// the same h are compared: one with an isomorphism slid through the middle,
/// and the instance's canonical one. Enumerable instances additionally group
/// every nuclear pair (f, g) by the composite g f.
template <HasNuclearIdeal C>
AxiomReport check_tracedness(const C& cat, const RunConfig& cfg) {
  AxiomReport r;
  r.law = "tracedness";
  r.instance = cat.name();
  if constexpr (SamplesIso<C>) {
    Lcg iso_rng = substream(cfg.seed, cat.name() + "/tracedness-iso");
    run_law(cat, "iso-through-middle", {2, {{{0}, {1}, Kind::Nuclear}, {{1}, {0}, Kind::Nuclear}}},
            [&](const Case<C>& c) {
              const auto &f = c.mor[0], &g = c.mor[1];
              auto [b2, m, m_inv] = cat.sample_iso(iso_rng, c.obj[1]);
              auto f2 = cat.compose(m, f);
              auto g2 = cat.compose(g, m_inv);
              if (!cat.equal(cat.compose(g2, f2), cat.compose(g, f))) return Outcome::fail("iso does not cancel");
              auto t1 = derive_trace(cat, f, g);
              auto t2 = derive_trace(cat, f2, g2);
              return Outcome::check(cat.scalar_equal(t1, t2),
                                    "trace via B " + cat.describe_scalar(t1) + " vs via B' " + cat.describe_scalar(t2));
            },
            cfg, r);
  }
  if constexpr (Factorizes<C>) {
    run_law(cat, "canonical-factorization", {2, {{{0}, {1}, Kind::Nuclear}, {{1}, {0}, Kind::Nuclear}}},
            [&](const Case<C>& c) {
              const auto &f = c.mor[0], &g = c.mor[1];
              auto h = cat.compose(g, f);
              auto fg = cat.factorize(h);
              if (!fg) return Outcome::fail("composite of nuclear maps has no canonical factorization");
              if (!cat.equal(cat.compose(fg->second, fg->first), h)) return Outcome::fail("factorization != h");
              auto t1 = derive_trace(cat, f, g);
              auto t2 = derive_trace(cat, fg->first, fg->second);
              return Outcome::check(cat.scalar_equal(t1, t2), "given " + cat.describe_scalar(t1) + " vs canonical " +
                                                                  cat.describe_scalar(t2));
            },
            cfg, r);
  }
  if constexpr (Enumerable<C>) {
    if (cfg.budget > 0 && cfg.allow_exhaustive) {
      const auto start = std::chrono::steady_clock::now();
      LawStats stats;
      stats.law = "all-factorizations";
      stats.exhaustive_size = cfg.size;
      stats.fully_exhaustive = true;
      auto objs = cat.objects_up_to(cfg.size);
      for (const auto& a : objs) {
        std::map<std::string, typename C::Scalar> seen;
        for (const auto& b : objs) {
          std::vector<typename C::Morphism> fs, gs;
          for (auto& f : cat.morphisms(a, b)) {
            if (cat.is_nuclear(f)) fs.push_back(std::move(f));
          }
          for (auto& g : cat.morphisms(b, a)) {
            if (cat.is_nuclear(g)) gs.push_back(std::move(g));
          }
          for (const auto& f : fs) {
            for (const auto& g : gs) {
              ++stats.cases;
              auto key = cat.describe(cat.compose(g, f));
              auto t = derive_trace(cat, f, g);
              auto [it, fresh] = seen.emplace(key, t);
              if (!fresh && !cat.scalar_equal(it->second, t)) {
                ++stats.failed;
                r.add_failure(stats.law,
                              "h = " + key + ": " + cat.describe_scalar(it->second) + " vs " + cat.describe_scalar(t) +
                                  " via " + cat.describe(f) + " ; " + cat.describe(g),
                              cfg.max_witnesses);
              }
            }
          }
        }
      }
      r.cases += stats.cases;
      r.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.parts.push_back(stats);
    }
  }
  return r;
}

/// The five trace-ideal axioms: ideal, dinaturality, vanishing, tensor,
/// star and conjugation.
template <HasTraceIdeal C>
AxiomReport check_trace_axioms(const C& cat, const RunConfig& cfg) {
  AxiomReport r;
  r.law = "trace-axioms";
  r.instance = cat.name();
  auto member = [&](const typename C::Morphism& m, const std::string& what) {
    return Outcome::check(cat.in_trace_class(m), what + " not in trace class: " + cat.describe(m));
  };
  auto eq = [&](const typename C::Scalar& a, const typename C::Scalar& b, const std::string& what) {
    return Outcome::check(cat.scalar_equal(a, b), what + ": " + cat.describe_scalar(a) + " vs " + cat.describe_scalar(b));
  };
  run_law(cat, "ideal", {1, {{{0}, {0}, Kind::TraceClass}, {{0}, {0}}}},
          [&](const Case<C>& c) {
            const auto &h = c.mor[0], &k = c.mor[1];
            return laws::all_of({member(cat.compose(k, h), "k h"), member(cat.compose(h, k), "h k")});
          },
          cfg, r);
  run_law(cat, "dinaturality", {2, {{{0}, {1}}, {{1}, {0}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            auto gf = cat.compose(g, f);
            if (!cat.in_trace_class(gf)) return Outcome::skip();
            auto fg = cat.compose(f, g);
            auto m = member(fg, "f g");
            if (m.status == Outcome::Fail) return m;
            return eq(cat.trace(gf), cat.trace(fg), "tr(gf) = tr(fg)");
          },
          cfg, r);
  run_law(cat, "vanishing", {1, {{{0}, {0}, Kind::TraceClass}, {{}, {}}}},
          [&](const Case<C>& c) {
            const auto &h = c.mor[0], &s = c.mor[1];
            auto hi = cat.tensor(h, cat.identity(cat.unit()));
            return laws::all_of({member(hi, "h x id_I"), eq(cat.trace(hi), cat.trace(h), "tr(h x id_I) = tr(h)"),
                                 member(s, "scalar"), eq(cat.trace(s), cat.to_scalar(s), "tr_I(s) = s")});
          },
          cfg, r);
  run_law(cat, "tensor", {2, {{{0}, {0}, Kind::TraceClass}, {{1}, {1}, Kind::TraceClass}}},
          [&](const Case<C>& c) {
            const auto &h = c.mor[0], &k = c.mor[1];
            auto hk = cat.tensor(h, k);
            auto m = member(hk, "h x k");
            if (m.status == Outcome::Fail) return m;
            return eq(cat.trace(hk), cat.scalar_mul(cat.trace(h), cat.trace(k)), "tr(h x k) = tr(h) tr(k)");
          },
          cfg, r);
  run_law(cat, "star-conj", {1, {{{0}, {0}, Kind::TraceClass}}},
          [&](const Case<C>& c) {
            const auto& h = c.mor[0];
            auto hs = cat.star(h);
            auto hc = cat.conj(h);
            auto m1 = member(hs, "h*");
            if (m1.status == Outcome::Fail) return m1;
            auto m2 = member(hc, "conj h");
            if (m2.status == Outcome::Fail) return m2;
            auto t = cat.scalar_star(cat.trace(h));
            return laws::all_of({eq(cat.trace(hs), t, "tr(h*) = tr(h)*"), eq(cat.trace(hc), t, "tr(conj h) = tr(h)*")});
          },
          cfg, r);
  return r;
}

/// Parametrized trace axioms: both ideal properties, vanishing (unit and
/// iterated), superposing, yanking, sliding, tightening, star/conjugation
/// compatibility and the generalized yanking rule.
template <HasParamTrace C>
AxiomReport check_param_trace_axioms(const C& cat, const RunConfig& cfg) {
  using laws::same_morphism;
  AxiomReport r;
  r.law = "param-trace-axioms";
  r.instance = cat.name();
  using M = typename C::Morphism;
  using O = typename C::Object;
  auto member = [&](const M& f, const O& a, const O& b, const O& u, const std::string& what) {
    return Outcome::check(cat.param_member(f, a, b, u), what + " not in I^U_{A,B}: " + cat.describe(f));
  };
  // objects: 0 = A, 1 = B, 2 = U
  const Slot param{{0, 2}, {1, 2}, Kind::Param};
  run_law(cat, "ideal-parameter", {3, {param, {{2}, {2}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &h = c.mor[1];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2];
            return laws::all_of(
                {member(cat.compose(cat.tensor(cat.identity(b), h), f), a, b, u, "(id x h) f"),
                 member(cat.compose(f, cat.tensor(cat.identity(a), h)), a, b, u, "f (id x h)")});
          },
          cfg, r);
  run_law(cat, "ideal-outer", {5, {param, {{1}, {3}}, {{4}, {0}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1], &h = c.mor[2];
            const auto &u = c.obj[2], &cc = c.obj[3], &d = c.obj[4];
            auto id_u = cat.identity(u);
            return member(cat.compose(cat.tensor(g, id_u), cat.compose(f, cat.tensor(h, id_u))), d, cc, u,
                          "(g x id) f (h x id)");
          },
          cfg, r);
  run_law(cat, "vanishing-unit", {2, {{{0}, {1}}}},
          [&](const Case<C>& c) {
            const auto& g = c.mor[0];
            const auto &a = c.obj[0], &b = c.obj[1];
            auto m = member(g, a, b, cat.unit(), "g with U = I");
            if (m.status == Outcome::Fail) return m;
            return same_morphism(cat, cat.param_trace(g, a, b, cat.unit()), g, "tr^I(g) = g");
          },
          cfg, r);
  // objects: 0 = A, 1 = B, 2 = U, 3 = V
  run_law(cat, "vanishing-iterated", {4, {{{0, 2, 3}, {1, 2, 3}}}},
          [&](const Case<C>& c) {
            const auto& g = c.mor[0];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2], &v = c.obj[3];
            const auto au = cat.tensor(a, u);
            const auto bu = cat.tensor(b, u);
            const auto uv = cat.tensor(u, v);
            bool whole = cat.param_member(g, a, b, uv);
            bool inner = cat.param_member(g, au, bu, v);
            std::optional<M> tv;
            if (inner) tv = cat.param_trace(g, au, bu, v);
            bool outer = inner && cat.param_member(*tv, a, b, u);
            if (whole != outer) {
              return Outcome::fail(std::string("membership iff fails: g in I^{UxV} is ") + (whole ? "true" : "false") +
                                   ", g in I^V and tr^V(g) in I^U is " + (outer ? "true" : "false"));
            }
            if (!whole) return Outcome::pass();
            return same_morphism(cat, cat.param_trace(g, a, b, uv), cat.param_trace(*tv, a, b, u),
                                 "tr^{UxV}(g) = tr^U(tr^V(g))");
          },
          cfg, r);
  // objects: 0 = A, 1 = B, 2 = U, 3 = C, 4 = D
  run_law(cat, "superposing", {5, {param, {{3}, {4}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2], &cc = c.obj[3], &d = c.obj[4];
            auto gf = cat.tensor(g, f);
            auto ca = cat.tensor(cc, a);
            auto db = cat.tensor(d, b);
            auto m = member(gf, ca, db, u, "g x f");
            if (m.status == Outcome::Fail) return m;
            return same_morphism(cat, cat.param_trace(gf, ca, db, u), cat.tensor(g, cat.param_trace(f, a, b, u)),
                                 "tr(g x f) = g x tr(f)");
          },
          cfg, r);
  // objects: 0 = A, 1 = U, 2 = B
  auto yank = [&](const Case<C>& c, bool conditional) {
    const auto &f = c.mor[0], &g = c.mor[1];
    const auto &a = c.obj[0], &u = c.obj[1], &b = c.obj[2];
    auto y = cat.compose(cat.symmetry(u, b), cat.tensor(f, g));
    if (!cat.param_member(y, a, b, u)) {
      if (conditional) return Outcome::skip();
      return Outcome::fail("c (f x g) not in I^U_{A,B}");
    }
    return same_morphism(cat, cat.param_trace(y, a, b, u), cat.compose(g, f), "tr^U(c (f x g)) = g f");
  };
  run_law(cat, "yanking", {3, {{{0}, {1}}, {{1}, {2}}}}, [&](const Case<C>& c) { return yank(c, true); }, cfg, r);
  if constexpr (C::unconditional_yanking) {
    run_law(cat, "generalized-yanking", {3, {{{0}, {1}}, {{1}, {2}}}},
            [&](const Case<C>& c) { return yank(c, false); }, cfg, r);
  } else {
    if constexpr (HasNuclearIdeal<C>) {
      run_law(cat, "generalized-yanking-nuclear", {3, {{{0}, {1}, Kind::Nuclear}, {{1}, {2}, Kind::Nuclear}}},
              [&](const Case<C>& c) { return yank(c, false); }, cfg, r);
    }
    r.notes.push_back("generalized yanking checked for nuclear f, g; the unconditional form is not claimed here");
  }
  // objects: 0 = A, 1 = B, 2 = U, 3 = V
  run_law(cat, "sliding", {4, {{{0, 2}, {1, 3}}, {{3}, {2}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &uu = c.mor[1];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2], &v = c.obj[3];
            auto left = cat.compose(cat.tensor(cat.identity(b), uu), f);   // A x U -> B x U
            auto right = cat.compose(f, cat.tensor(cat.identity(a), uu));  // A x V -> B x V
            bool lm = cat.param_member(left, a, b, u);
            bool rm = cat.param_member(right, a, b, v);
            if (lm != rm) {
              return Outcome::fail(std::string("membership iff fails: (id x u) f in I^U is ") + (lm ? "true" : "false") +
                                   ", f (id x u) in I^V is " + (rm ? "true" : "false"));
            }
            if (!lm) return Outcome::pass();
            return same_morphism(cat, cat.param_trace(left, a, b, u), cat.param_trace(right, a, b, v),
                                 "tr^U((id x u) f) = tr^V(f (id x u))");
          },
          cfg, r);
  // objects: 0 = A, 1 = B, 2 = U, 3 = C, 4 = D
  run_law(cat, "tightening", {5, {param, {{1}, {3}}, {{4}, {0}}}},
          [&](const Case<C>& c) {
            const auto &f = c.mor[0], &g = c.mor[1], &h = c.mor[2];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2], &cc = c.obj[3], &d = c.obj[4];
            auto id_u = cat.identity(u);
            auto outer = cat.compose(cat.tensor(g, id_u), cat.compose(f, cat.tensor(h, id_u)));
            auto m = member(outer, d, cc, u, "(g x id) f (h x id)");
            if (m.status == Outcome::Fail) return m;
            return same_morphism(cat, cat.param_trace(outer, d, cc, u),
                                 cat.compose(g, cat.compose(cat.param_trace(f, a, b, u), h)),
                                 "tr((g x id) f (h x id)) = g tr(f) h");
          },
          cfg, r);
  run_law(cat, "star-conj", {3, {param}},
          [&](const Case<C>& c) {
            const auto& f = c.mor[0];
            const auto &a = c.obj[0], &b = c.obj[1], &u = c.obj[2];
            auto fs = cat.star(f);
            auto fc = cat.conj(f);
            auto t = cat.param_trace(f, a, b, u);
            auto m1 = member(fs, b, a, u, "f*");
            if (m1.status == Outcome::Fail) return m1;
            auto m2 = member(fc, cat.conj(a), cat.conj(b), cat.conj(u), "conj f");
            if (m2.status == Outcome::Fail) return m2;
            return laws::all_of(
                {same_morphism(cat, cat.param_trace(fs, b, a, u), cat.star(t), "tr(f*) = tr(f)*"),
                 same_morphism(cat, cat.param_trace(fc, cat.conj(a), cat.conj(b), cat.conj(u)), cat.conj(t),
                               "tr(conj f) = conj tr(f)")});
          },
          cfg, r);
  return r;
}

}  // namespace nucleal::core
