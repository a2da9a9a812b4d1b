#include "nucleal/finhilb.hpp"

#include <cstdio>

namespace nucleal::finhilb {

namespace {

std::string number(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string Category::describe(const Morphism& f) const {
  std::string s = std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + "[";
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    s += i ? "; " : "";
    for (Eigen::Index j = 0; j < f.cols(); ++j) s += (j ? " " : "") + number(f(i, j));
  }
  return s + "]";
}

std::string Category::describe_scalar(Scalar a) const { return number(a); }

}  // namespace nucleal::finhilb
