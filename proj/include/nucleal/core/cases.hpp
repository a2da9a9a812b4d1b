#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nucleal/core/category.hpp"
#include "nucleal/core/error.hpp"
#include "nucleal/core/report.hpp"
#include "nucleal/core/rng.hpp"

namespace nucleal::core {

/// Which hom-set members a slot ranges over.
enum class Kind {
  Any,
  Nuclear,
  TraceClass,  // endomorphism src -> src in the trace class
  Param,       // src = {A, U}, tgt = {B, U}; member of I^U_{A,B}
};

/// Object reference inside a shape: i is object i, ~i is its conjugate.
constexpr int conj_of(int i) { return ~i; }

struct Slot {
  std::vector<int> src;  // tensored in order; empty is the unit
  std::vector<int> tgt;
  Kind kind = Kind::Any;
};

/// A law's free variables: how many objects and which morphisms between them.
struct Shape {
  int objects = 0;
  std::vector<Slot> slots;
};

struct RunConfig {
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  int size = 3;                         // target object size
  std::size_t exhaustive_cap = 250000;  // max cases for one exhaustive pass
  std::size_t max_witnesses = 5;
  int attempts = 64;  // rejection-sampling tries per slot
  bool allow_exhaustive = true;
};

struct Outcome {
  enum Status { Pass, Fail, Skip } status = Pass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Skip, {}}; }
  static Outcome fail(std::string d) { return {Fail, std::move(d)}; }
  static Outcome check(bool ok, const std::string& d) { return ok ? pass() : fail(d); }
};

template <class C>
struct Case {
  std::vector<typename C::Object> obj;
  std::vector<typename C::Morphism> mor;
};

template <class C>
typename C::Object resolve(const C& cat, const std::vector<typename C::Object>& obj, int ref) {
  return ref >= 0 ? obj[static_cast<std::size_t>(ref)] : cat.conj(obj[static_cast<std::size_t>(~ref)]);
}

template <class C>
typename C::Object tensor_all(const C& cat, const std::vector<typename C::Object>& obj, const std::vector<int>& refs) {
  auto out = cat.unit();
  for (int r : refs) out = cat.tensor(out, resolve(cat, obj, r));
  return out;
}

namespace detail {

template <class C>
std::string describe_case(const C& cat, const Case<C>& c) {
  std::string s = "objects[";
  for (std::size_t i = 0; i < c.obj.size(); ++i) s += (i ? ", " : "") + std::string(cat.describe(c.obj[i]));
  s += "] morphisms[";
  for (std::size_t i = 0; i < c.mor.size(); ++i) s += (i ? "; " : "") + std::string(cat.describe(c.mor[i]));
  return s + "]";
}

template <class C>
bool slot_member(const C& cat, const Slot& slot, const std::vector<typename C::Object>& obj,
                 const typename C::Morphism& m) {
  switch (slot.kind) {
    case Kind::Any:
      return true;
    case Kind::Nuclear:
      if constexpr (HasNuclearIdeal<C>) return cat.is_nuclear(m);
      throw ConfigurationError(cat.name() + " has no nuclear ideal");
    case Kind::TraceClass:
      if constexpr (HasTraceIdeal<C>) return cat.in_trace_class(m);
      throw ConfigurationError(cat.name() + " has no trace ideal");
    case Kind::Param:
      if constexpr (HasParamTrace<C>) {
        return cat.param_member(m, resolve(cat, obj, slot.src.at(0)), resolve(cat, obj, slot.tgt.at(0)),
                                resolve(cat, obj, slot.src.at(1)));
      }
      throw ConfigurationError(cat.name() + " has no parametrized trace");
  }
  return false;
}

template <class C>
bool sample_slot(const C& cat, const Slot& slot, const std::vector<typename C::Object>& obj, Lcg& rng, int attempts,
                 typename C::Morphism& out) {
  auto a = tensor_all(cat, obj, slot.src);
  auto b = tensor_all(cat, obj, slot.tgt);
  if (slot.kind == Kind::Nuclear) {
    if constexpr (SamplesNuclear<C>) {
      out = cat.sample_nuclear(rng, a, b);
      return true;
    }
  }
  if (slot.kind == Kind::TraceClass) {
    if constexpr (SamplesTraceClass<C>) {
      out = cat.sample_trace_class(rng, a);
      return true;
    }
  }
  for (int t = 0; t < attempts; ++t) {
    auto m = cat.sample_morphism(rng, a, b);
    if (slot_member(cat, slot, obj, m)) {
      out = std::move(m);
      return true;
    }
  }
  return false;
}

/// Advances a mixed-radix counter; returns false after the last digit wraps.
inline bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace detail

/// Runs one law over its shape and folds the outcome into `report`.
///
/// With an enumerable instance, every case at object size <= cfg.size is
/// tried when that fits in cfg.exhaustive_cap. Otherwise the largest size
/// that fits is enumerated and cfg.budget seeded samples are drawn at
/// cfg.size. Without enumeration only samples are drawn.
template <TensoredStarCategory C, class Check>
void run_law(const C& cat, const std::string& law, const Shape& shape, Check&& check, const RunConfig& cfg,
             AxiomReport& report) {
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  const auto start = std::chrono::steady_clock::now();
  LawStats stats;
  stats.law = law;

  auto run_case = [&](const Case<C>& c) {
    Outcome out;
    try {
      out = check(c);
    } catch (const std::exception& e) {
      out = Outcome::fail(std::string("exception: ") + e.what());
    }
    if (out.status == Outcome::Skip) {
      ++stats.skipped;
      return;
    }
    ++stats.cases;
    if (out.status == Outcome::Fail) {
      ++stats.failed;
      report.add_failure(law, out.detail + " | " + detail::describe_case(cat, c), cfg.max_witnesses);
    }
  };

  if (cfg.budget == 0) {
    stats.exhaustive_size = -1;
    stats.fully_exhaustive = true;
  } else {
    int enumerated = -1;
    if constexpr (Enumerable<C>) {
      auto count_at = [&](int size) {
        auto objs = cat.objects_up_to(size);
        std::vector<std::size_t> radix(static_cast<std::size_t>(shape.objects), objs.size());
        std::vector<std::size_t> idx(radix.size(), 0);
        double total = 0;
        if (objs.empty()) return 0.0;
        do {
          std::vector<Object> o;
          for (auto i : idx) o.push_back(objs[i]);
          double prod = 1;
          for (const auto& s : shape.slots) {
            prod *= static_cast<double>(cat.morphism_count(tensor_all(cat, o, s.src), tensor_all(cat, o, s.tgt)));
          }
          total += prod;
        } while (!radix.empty() && detail::advance(idx, radix));
        return total;
      };
      if (cfg.allow_exhaustive) {
        for (int s = cfg.size; s >= 0; --s) {
          if (count_at(s) <= static_cast<double>(cfg.exhaustive_cap)) {
            enumerated = s;
            break;
          }
        }
      }
      if (enumerated >= 0) {
        auto objs = cat.objects_up_to(enumerated);
        std::map<std::string, std::vector<Morphism>> cache;
        auto list_for = [&](const Slot& s, const std::vector<Object>& o) -> const std::vector<Morphism>& {
          auto a = tensor_all(cat, o, s.src);
          auto b = tensor_all(cat, o, s.tgt);
          std::string key = std::to_string(static_cast<int>(s.kind)) + "|" + cat.describe(a) + "|" + cat.describe(b);
          if (s.kind == Kind::Param) {
            for (int r : s.src) key += "|" + cat.describe(resolve(cat, o, r));
            for (int r : s.tgt) key += "|" + cat.describe(resolve(cat, o, r));
          }
          auto it = cache.find(key);
          if (it != cache.end()) return it->second;
          std::vector<Morphism> all = cat.morphisms(a, b);
          std::vector<Morphism> kept;
          for (auto& m : all) {
            if (detail::slot_member(cat, s, o, m)) kept.push_back(std::move(m));
          }
          return cache.emplace(key, std::move(kept)).first->second;
        };
        std::vector<std::size_t> oradix(static_cast<std::size_t>(shape.objects), objs.size());
        std::vector<std::size_t> oidx(oradix.size(), 0);
        do {
          Case<C> c;
          for (auto i : oidx) c.obj.push_back(objs[i]);
          std::vector<const std::vector<Morphism>*> lists;
          std::vector<std::size_t> mradix;
          bool empty = false;
          for (const auto& s : shape.slots) {
            lists.push_back(&list_for(s, c.obj));
            mradix.push_back(lists.back()->size());
            if (lists.back()->empty()) empty = true;
          }
          if (empty) continue;
          std::vector<std::size_t> midx(mradix.size(), 0);
          do {
            c.mor.clear();
            for (std::size_t k = 0; k < midx.size(); ++k) c.mor.push_back((*lists[k])[midx[k]]);
            run_case(c);
          } while (!mradix.empty() && detail::advance(midx, mradix));
        } while (!oradix.empty() && detail::advance(oidx, oradix));
      }
    }
    stats.exhaustive_size = enumerated;
    stats.fully_exhaustive = enumerated == cfg.size;
    if (!stats.fully_exhaustive) {
      Lcg rng = substream(cfg.seed, cat.name() + "/" + law);
      std::size_t shortfall = 0;
      for (std::size_t n = 0; n < cfg.budget; ++n) {
        bool drawn = false;
        for (int attempt = 0; attempt < cfg.attempts && !drawn; ++attempt) {
          Case<C> c;
          for (int i = 0; i < shape.objects; ++i) c.obj.push_back(cat.sample_object(rng, cfg.size));
          bool ok = true;
          for (const auto& s : shape.slots) {
            Morphism m;
            if (!detail::sample_slot(cat, s, c.obj, rng, cfg.attempts, m)) {
              ok = false;
              break;
            }
            c.mor.push_back(std::move(m));
          }
          if (!ok) continue;
          drawn = true;
          ++stats.sampled;
          run_case(c);
        }
        if (!drawn) ++shortfall;
      }
      if (shortfall > 0) {
        stats.reduced = true;
        report.reduced = true;
        report.notes.push_back(law + ": sampler exhausted on " + std::to_string(shortfall) + " of " +
                               std::to_string(cfg.budget) + " draws");
      }
    }
  }

  report.cases += stats.cases;
  report.exhaustive = report.exhaustive && stats.fully_exhaustive;
  report.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.parts.push_back(stats);
}

/// Runs a fixed list of hand-written cases as one law.
template <TensoredStarCategory C, class Check>
void run_fixed(const C& cat, const std::string& law, const std::vector<Case<C>>& cases, Check&& check,
               const RunConfig& cfg, AxiomReport& report) {
  const auto start = std::chrono::steady_clock::now();
  LawStats stats;
  stats.law = law;
  stats.exhaustive_size = cfg.size;
  stats.fully_exhaustive = true;
  for (const auto& c : cases) {
    Outcome out;
    try {
      out = check(c);
    } catch (const std::exception& e) {
      out = Outcome::fail(std::string("exception: ") + e.what());
    }
    if (out.status == Outcome::Skip) {
      ++stats.skipped;
      continue;
    }
    ++stats.cases;
    if (out.status == Outcome::Fail) {
      ++stats.failed;
      report.add_failure(law, out.detail + " | " + detail::describe_case(cat, c), cfg.max_witnesses);
    }
  }
  report.cases += stats.cases;
  report.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.parts.push_back(stats);
}

}  // namespace nucleal::core
