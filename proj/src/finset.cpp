#include "nucleal/finset.hpp"

#include <algorithm>
#include <set>

#include "nucleal/core/error.hpp"

namespace nucleal {

FinSet::FinSet(std::vector<std::string> ls) : labels(std::move(ls)) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvariantError("FinSet labels must be unique");
}

FinSet FinSet::range(int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
  return s;
}

FinSet FinSet::point() {
  FinSet s;
  s.labels = {"*"};
  return s;
}

int FinSet::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::string FinSet::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}";
}

namespace {

bool is_point(const FinSet& s) { return s.labels.size() == 1 && s.labels[0] == "*"; }

}  // namespace

FinSet product(const FinSet& a, const FinSet& b) {
  if (is_point(a)) return b;
  if (is_point(b)) return a;
  FinSet out;
  out.labels.reserve(a.labels.size() * b.labels.size());
  for (const auto& x : a.labels) {
    for (const auto& y : b.labels) {
      std::string l;
      l.reserve(x.size() + y.size() + 3);
      l += '(';
      l += x;
      l += ',';
      l += y;
      l += ')';
      out.labels.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<int> swap_index(int na, int nb) {
  std::vector<int> p(static_cast<std::size_t>(na * nb));
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) p[static_cast<std::size_t>(a * nb + b)] = b * na + a;
  }
  return p;
}

}  // namespace nucleal
