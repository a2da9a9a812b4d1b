#pragma once

#include <string>
#include <vector>

namespace nucleal {

/// Finite set given by an ordered list of distinct labels.
struct FinSet {
  std::vector<std::string> labels;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> ls);

  /// {"0", ..., "n-1"}
  static FinSet range(int n);
  /// The one-point set {"*"} used as tensor unit.
  static FinSet point();

  [[nodiscard]] int size() const { return static_cast<int>(labels.size()); }
  [[nodiscard]] int index_of(const std::string& label) const;  // -1 if absent
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// Cartesian product with pair (a, b) at index a * |B| + b. The one-point
/// set acts as a strict unit on labels.
FinSet product(const FinSet& a, const FinSet& b);

/// Index of (a, b) in product(A, B) is a * nb + b; returns p with
/// p[a * nb + b] = b * na + a, the position of (b, a) in product(B, A).
std::vector<int> swap_index(int na, int nb);

}  // namespace nucleal
