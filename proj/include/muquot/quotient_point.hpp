#pragma once

#include <vector>

#include "muquot/poly.hpp"

namespace muquot {

// Verdict vocabulary shared by every membership-style test.  Boundary means
// the decision fell inside the margin band and is deliberately left open.
enum class Region { Inside, Outside, Boundary };

inline const char* region_name(Region r) {
  switch (r) {
    case Region::Inside: return "Inside";
    case Region::Outside: return "Outside";
    default: return "Boundary";
  }
}

// Point of the quotient data space: x has n entries, y has n-1.
struct QuotientPoint {
  int n = 0;
  std::vector<Cx> x;
  std::vector<Cx> y;

  void validate() const {
    if (n < 2) fail(Errc::SizeTooSmall, "quotient points need n >= 2");
    if (static_cast<int>(x.size()) != n ||
        static_cast<int>(y.size()) != n - 1)
      fail(Errc::SizeMismatch, "quotient point component count mismatch");
  }
};

inline double max_abs_diff(const QuotientPoint& a, const QuotientPoint& b) {
  if (a.n != b.n) fail(Errc::SizeMismatch, "quotient point size mismatch");
  double m = 0.0;
  for (int i = 0; i < a.n; ++i) m = std::max(m, std::abs(a.x[i] - b.x[i]));
  for (int i = 0; i + 1 < a.n; ++i)
    m = std::max(m, std::abs(a.y[i] - b.y[i]));
  return m;
}

}  // namespace muquot
