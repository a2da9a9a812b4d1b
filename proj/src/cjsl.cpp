#include "nucleal/cjsl.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "nucleal/core/error.hpp"

namespace nucleal::cjsl {

namespace {

using Order = std::vector<std::vector<bool>>;

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Least upper bound (or greatest lower bound) of a and b, or -1.
int least_bound(const Order& leq, int a, int b, bool upper) {
  const int n = static_cast<int>(leq.size());
  auto is_bound = [&](int c) {
    return upper ? (leq[sz(a)][sz(c)] && leq[sz(b)][sz(c)]) : (leq[sz(c)][sz(a)] && leq[sz(c)][sz(b)]);
  };
  for (int c = 0; c < n; ++c) {
    if (!is_bound(c)) continue;
    bool extremal = true;
    for (int d = 0; d < n && extremal; ++d) {
      if (is_bound(d)) extremal = upper ? leq[sz(c)][sz(d)] : leq[sz(d)][sz(c)];
    }
    if (extremal) return c;
  }
  return -1;
}

}  // namespace

FinLattice::FinLattice(std::vector<std::vector<bool>> relation, std::string name)
    : leq_(std::move(relation)), name_(std::move(name)) {
  const int n = size();
  if (n == 0) throw InvariantError("a lattice needs at least one element");
  for (const auto& row : leq_) {
    if (static_cast<int>(row.size()) != n) throw InvariantError("order relation is not square");
  }
  for (int a = 0; a < n; ++a) {
    if (!leq(a, a)) throw InvariantError("order is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) throw InvariantError("order is not antisymmetric");
      for (int c = 0; c < n; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) throw InvariantError("order is not transitive");
      }
    }
  }
  join_.assign(sz(n), std::vector<int>(sz(n)));
  meet_.assign(sz(n), std::vector<int>(sz(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      join_[sz(a)][sz(b)] = least_bound(leq_, a, b, true);
      meet_[sz(a)][sz(b)] = least_bound(leq_, a, b, false);
      if (join_[sz(a)][sz(b)] < 0) throw InvariantError("elements " + std::to_string(a) + ", " + std::to_string(b) + " have no join");
      if (meet_[sz(a)][sz(b)] < 0) throw InvariantError("elements " + std::to_string(a) + ", " + std::to_string(b) + " have no meet");
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (int a = 1; a < n; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }
}

int FinLattice::sup(const std::vector<int>& xs) const {
  int s = bottom_;
  for (int x : xs) s = join(s, x);
  return s;
}

std::vector<int> FinLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    bool reducible = false;
    for (int b = 0; b < size() && !reducible; ++b) {
      for (int c = 0; c < size() && !reducible; ++c) {
        if (b != a && c != a && join(b, c) == a) reducible = true;
      }
    }
    if (!reducible) out.push_back(a);
  }
  return out;
}

FinLattice chain(int n) {
  Order leq(sz(n), std::vector<bool>(sz(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) leq[sz(a)][sz(b)] = a <= b;
  }
  return FinLattice(leq, "chain" + std::to_string(n));
}

namespace {

// Bottom 0, top n-1, inner elements related by the strict pairs given.
Order bounded(int inner, const std::vector<std::pair<int, int>>& less) {
  const int n = inner + 2;
  Order leq(sz(n), std::vector<bool>(sz(n)));
  for (int a = 0; a < n; ++a) {
    leq[sz(a)][sz(a)] = true;
    leq[0][sz(a)] = true;
    leq[sz(a)][sz(n - 1)] = true;
  }
  for (auto [a, b] : less) leq[sz(a + 1)][sz(b + 1)] = true;
  return leq;
}

}  // namespace

FinLattice m3() { return FinLattice(bounded(3, {}), "M3"); }

FinLattice n5() { return FinLattice(bounded(3, {{0, 1}}), "N5"); }

FinLattice opposite(const FinLattice& l) {
  Order leq(sz(l.size()), std::vector<bool>(sz(l.size())));
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) leq[sz(a)][sz(b)] = l.leq(b, a);
  }
  return FinLattice(leq, l.name() + "^op");
}

bool is_distributive(const FinLattice& l) {
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      for (int c = 0; c < l.size(); ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
      }
    }
  }
  return true;
}

std::vector<FinLattice> lattices_of_size(int n) {
  if (n < 1) return {};
  if (n <= 2) return {chain(n)};
  const int m = n - 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::size_t combos = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) combos *= 3;
  std::map<std::vector<bool>, Order> found;
  std::vector<int> perm(sz(m));
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::pair<int, int>> less;
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      if (c % 3 == 1) less.emplace_back(i, j);
      if (c % 3 == 2) less.emplace_back(j, i);
      c /= 3;
    }
    Order leq = bounded(m, less);
    std::optional<FinLattice> l;
    try {
      l.emplace(leq);
    } catch (const InvariantError&) {
      continue;
    }
    // Canonical key: the smallest relabelling of the inner elements.
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key;
      auto at = [&](int x) { return (x == 0 || x == n - 1) ? x : perm[sz(x - 1)] + 1; };
      Order relabelled(sz(n), std::vector<bool>(sz(n)));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) relabelled[sz(at(a))][sz(at(b))] = leq[sz(a)][sz(b)];
      }
      for (const auto& row : relabelled) key.insert(key.end(), row.begin(), row.end());
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    found.emplace(best, leq);
  }
  std::vector<FinLattice> out;
  int index = 0;
  for (const auto& [key, leq] : found) {
    ++index;
    FinLattice l(leq);
    bool total = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) total = total && (l.leq(a, b) || l.leq(b, a));
    }
    std::string name = "L" + std::to_string(n) + "." + std::to_string(index);
    if (total) {
      name = "chain" + std::to_string(n);
    } else if (n == 5 && !is_distributive(l)) {
      name = l.join_irreducibles().size() == 3 && l.meet(l.join_irreducibles()[0], l.join_irreducibles()[1]) == l.bottom() &&
                     l.meet(l.join_irreducibles()[1], l.join_irreducibles()[2]) == l.bottom() &&
                     l.meet(l.join_irreducibles()[0], l.join_irreducibles()[2]) == l.bottom()
                 ? "M3"
                 : "N5";
    } else if (n == 4) {
      name = "2x2";
    }
    out.emplace_back(leq, name);
  }
  return out;
}

std::vector<FinLattice> lattices_up_to(int n) {
  std::vector<FinLattice> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& l : lattices_of_size(k)) out.push_back(std::move(l));
  }
  return out;
}

std::string sup_violation(const FinLattice& s, const FinLattice& t, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != s.size()) return "value table has the wrong length";
  for (int v : values) {
    if (v < 0 || v >= t.size()) return "value outside the target lattice";
  }
  if (values[sz(s.bottom())] != t.bottom()) return "bottom is not preserved";
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (values[sz(s.join(a, b))] != t.join(values[sz(a)], values[sz(b)])) {
        return "join of " + std::to_string(a) + " and " + std::to_string(b) + " is not preserved";
      }
    }
  }
  return {};
}

SupMap::SupMap(LatticePtr s, LatticePtr t, std::vector<int> v) : source(std::move(s)), target(std::move(t)), values(std::move(v)) {
  auto why = sup_violation(*source, *target, values);
  if (!why.empty()) throw InvariantError("not a sup-map: " + why);
}

std::string SupMap::describe() const {
  std::string s = source->name() + "->" + target->name() + "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s + "]";
}

SupMap identity(const LatticePtr& l) {
  std::vector<int> v(sz(l->size()));
  std::iota(v.begin(), v.end(), 0);
  return {l, l, v};
}

SupMap constant_bottom(const LatticePtr& s, const LatticePtr& t) {
  return {s, t, std::vector<int>(sz(s->size()), t->bottom())};
}

SupMap compose(const SupMap& f, const SupMap& g) {
  if (!(*f.target == *g.source)) throw ShapeError("sup-maps do not compose");
  std::vector<int> v(f.values.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = g(f.values[a]);
  return {f.source, g.target, v};
}

std::vector<SupMap> all_sup_maps(const LatticePtr& a, const LatticePtr& b) {
  const auto ji = a->join_irreducibles();
  std::vector<std::size_t> digit(ji.size(), 0);
  std::vector<SupMap> out;
  const auto nb = sz(b->size());
  while (true) {
    std::vector<int> v(sz(a->size()));
    for (int x = 0; x < a->size(); ++x) {
      int s = b->bottom();
      for (std::size_t k = 0; k < ji.size(); ++k) {
        if (a->leq(ji[k], x)) s = b->join(s, static_cast<int>(digit[k]));
      }
      v[sz(x)] = s;
    }
    bool consistent = true;
    for (std::size_t k = 0; k < ji.size(); ++k) consistent = consistent && v[sz(ji[k])] == static_cast<int>(digit[k]);
    if (consistent && sup_violation(*a, *b, v).empty()) out.emplace_back(a, b, v);
    std::size_t k = 0;
    for (; k < digit.size(); ++k) {
      if (++digit[k] < nb) break;
      digit[k] = 0;
    }
    if (k == digit.size()) break;
  }
  return out;
}

HrResult hr_apply(const SupMap& g) {
  const auto& b = *g.source;  // g : B -> A
  const auto& a = *g.target;
  HrResult r;
  r.values.resize(sz(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    std::vector<int> bs;
    for (int y = 0; y < b.size(); ++y) {
      if (!a.leq(x, g(y))) bs.push_back(y);
    }
    r.values[sz(x)] = b.sup(bs);
  }
  r.violation = sup_violation(a, b, r.values);
  r.sup_map = r.violation.empty();
  if (r.sup_map) r.map.emplace(g.target, g.source, r.values);
  return r;
}

NuclearWitness is_nuclear_morphism(const SupMap& f, int bound) {
  NuclearWitness w;
  if (f.source->size() > bound || f.target->size() > bound) {
    w.inconclusive = true;
    return w;
  }
  for (const auto& g : all_sup_maps(f.target, f.source)) {
    ++w.candidates;
    auto r = hr_apply(g);
    if (r.values == f.values) {
      w.nuclear = true;
      w.witness = g;
      return w;
    }
  }
  return w;
}

SupMap right_adjoint(const SupMap& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  std::vector<int> v(sz(b.size()));
  for (int y = 0; y < b.size(); ++y) {
    std::vector<int> as;
    for (int x = 0; x < a.size(); ++x) {
      if (b.leq(f(x), y)) as.push_back(x);
    }
    v[sz(y)] = a.sup(as);
  }
  return {std::make_shared<const FinLattice>(opposite(b)), std::make_shared<const FinLattice>(opposite(a)), v};
}

core::AxiomReport check_closure_lemma(int bound) {
  const auto start = std::chrono::steady_clock::now();
  core::AxiomReport r;
  r.law = "closure-lemma";
  r.instance = "cjsl";
  std::vector<LatticePtr> ls;
  for (auto& l : lattices_up_to(bound)) ls.push_back(std::make_shared<const FinLattice>(std::move(l)));
  std::map<std::pair<const FinLattice*, const FinLattice*>, std::vector<SupMap>> homs;
  auto hom = [&](const LatticePtr& x, const LatticePtr& y) -> const std::vector<SupMap>& {
    auto key = std::make_pair(x.get(), y.get());
    auto it = homs.find(key);
    if (it == homs.end()) it = homs.emplace(key, all_sup_maps(x, y)).first;
    return it->second;
  };
  std::map<std::string, bool> nuclear_cache;
  auto nuclear = [&](const SupMap& f) {
    auto key = f.describe();
    auto it = nuclear_cache.find(key);
    if (it == nuclear_cache.end()) it = nuclear_cache.emplace(key, is_nuclear_morphism(f, bound).nuclear).first;
    return it->second;
  };
  core::LawStats adj{"right-adjoint"}, post{"post-compose"}, pre{"pre-compose"};
  for (const auto& a : ls) {
    for (const auto& b : ls) {
      for (const auto& f : hom(a, b)) {
        if (!nuclear(f)) continue;
        ++adj.cases;
        if (!nuclear(right_adjoint(f))) {
          ++adj.failed;
          r.add_failure(adj.law, "right adjoint of nuclear " + f.describe() + " is not nuclear", 5);
        }
        for (const auto& c : ls) {
          for (const auto& g : hom(b, c)) {
            ++post.cases;
            if (!nuclear(compose(f, g))) {
              ++post.failed;
              r.add_failure(post.law, g.describe() + " after nuclear " + f.describe() + " is not nuclear", 5);
            }
          }
          for (const auto& h : hom(c, a)) {
            ++pre.cases;
            if (!nuclear(compose(h, f))) {
              ++pre.failed;
              r.add_failure(pre.law, "nuclear " + f.describe() + " after " + h.describe() + " is not nuclear", 5);
            }
          }
        }
      }
    }
  }
  for (auto* s : {&adj, &post, &pre}) {
    s->exhaustive_size = bound;
    s->fully_exhaustive = true;
    r.cases += s->cases;
    r.parts.push_back(*s);
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<HrPreservation> hr_preservation(const std::vector<FinLattice>& ls) {
  std::vector<HrPreservation> out;
  for (const auto& l : ls) {
    auto p = std::make_shared<const FinLattice>(l);
    HrPreservation h{l.name()};
    for (const auto& g : all_sup_maps(p, p)) {
      ++h.maps;
      if (!hr_apply(g).sup_map) ++h.non_sup;
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace nucleal::cjsl
