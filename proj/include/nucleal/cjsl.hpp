#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nucleal/core/report.hpp"

/// Finite lattices as complete join semilattices, and the Higgs-Rowe
/// nuclearity criterion.
namespace nucleal::cjsl {

/// Elements 0..n-1 ordered by leq[a][b] = (a <= b).
class FinLattice {
 public:
  FinLattice() = default;
  /// Validates a partial order with all binary joins and meets.
  explicit FinLattice(std::vector<std::vector<bool>> relation, std::string name = {});

  [[nodiscard]] int size() const { return static_cast<int>(leq_.size()); }
  [[nodiscard]] bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  [[nodiscard]] int join(int a, int b) const { return join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  [[nodiscard]] int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  [[nodiscard]] int bottom() const { return bottom_; }
  [[nodiscard]] int top() const { return top_; }
  /// Join of a set of elements; the empty join is bottom.
  [[nodiscard]] int sup(const std::vector<int>& xs) const;
  [[nodiscard]] const std::vector<std::vector<bool>>& order() const { return leq_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// Non-bottom elements that are not the join of two strictly smaller ones.
  [[nodiscard]] std::vector<int> join_irreducibles() const;

  friend bool operator==(const FinLattice& a, const FinLattice& b) { return a.leq_ == b.leq_; }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  int bottom_ = 0;
  int top_ = 0;
  std::string name_;
};

using LatticePtr = std::shared_ptr<const FinLattice>;

FinLattice chain(int n);
/// The diamond: bottom, three pairwise incomparable atoms, top.
FinLattice m3();
/// The pentagon: 0 < a < b < 1 and 0 < c < 1 with c incomparable to a, b.
FinLattice n5();
FinLattice opposite(const FinLattice& l);

/// Every lattice with exactly n elements, one per isomorphism class.
std::vector<FinLattice> lattices_of_size(int n);
/// Every lattice with 1..n elements, one per isomorphism class.
std::vector<FinLattice> lattices_up_to(int n);

/// a meet (b join c) = (a meet b) join (a meet c) for all a, b, c.
bool is_distributive(const FinLattice& l);

/// Preserves bottom and binary joins.
struct SupMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<int> values;

  SupMap() = default;
  SupMap(LatticePtr s, LatticePtr t, std::vector<int> v);  // validates
  int operator()(int a) const { return values[static_cast<std::size_t>(a)]; }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const SupMap& a, const SupMap& b) { return a.values == b.values; }
};

/// Describes why a value table fails the sup-map law, or empty.
std::string sup_violation(const FinLattice& s, const FinLattice& t, const std::vector<int>& values);

SupMap identity(const LatticePtr& l);
SupMap constant_bottom(const LatticePtr& s, const LatticePtr& t);
/// f then g.
SupMap compose(const SupMap& f, const SupMap& g);

/// Free values on the join-irreducibles, extended by joins and filtered
/// by the sup-map law.
std::vector<SupMap> all_sup_maps(const LatticePtr& a, const LatticePtr& b);

struct HrResult {
  std::vector<int> values;  // f(a) = sup{b | a not<= g(b)}
  bool sup_map = false;
  std::string violation;
  std::optional<SupMap> map;
};

/// Applies the Higgs-Rowe formula to g : B -> A, giving a table A -> B.
HrResult hr_apply(const SupMap& g);

struct NuclearWitness {
  bool nuclear = false;
  bool inconclusive = false;
  std::optional<SupMap> witness;  // g : B -> A with hr_apply(g) = f
  std::size_t candidates = 0;
};

/// Searches every sup-map g : B -> A; inconclusive above `bound` elements.
NuclearWitness is_nuclear_morphism(const SupMap& f, int bound = 6);

/// f°(b) = sup{a | f(a) <= b}, as a sup-map B^op -> A^op.
SupMap right_adjoint(const SupMap& f);

/// Over all lattices with at most `bound` elements: for nuclear f, the
/// right adjoint and composites on either side with arbitrary maps are
/// nuclear.
core::AxiomReport check_closure_lemma(int bound);

/// Records, per lattice, whether hr_apply(g) is a sup-map for every g : L -> L.
struct HrPreservation {
  std::string lattice;
  std::size_t maps = 0;
  std::size_t non_sup = 0;
};
std::vector<HrPreservation> hr_preservation(const std::vector<FinLattice>& ls);

}  // namespace nucleal::cjsl
