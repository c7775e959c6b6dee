#include "rwpnn/bspline.hpp"

namespace rwpnn {

namespace {

double linear(double x) {
  if (x < 0.0 || x >= 2.0) return 0.0;
  return x < 1.0 ? x : 2.0 - x;
}

double quadratic(double x) {
  if (x < 0.0 || x >= 3.0) return 0.0;
  if (x < 1.0) return 0.5 * x * x;
  if (x < 2.0) {
    const double d = x - 1.5;
    return 0.75 - d * d;
  }
  const double d = x - 3.0;
  return 0.5 * d * d;
}

double cubic(double x) {
  if (x < 0.0 || x >= 4.0) return 0.0;
  if (x < 1.0) return x * x * x / 6.0;
  if (x < 2.0) return (-3.0 * x * x * x + 12.0 * x * x - 12.0 * x + 4.0) / 6.0;
  if (x < 3.0) return (3.0 * x * x * x - 24.0 * x * x + 60.0 * x - 44.0) / 6.0;
  const double d = 4.0 - x;
  return d * d * d / 6.0;
}

}  // namespace

double bspline_eval(SplineOrder order, double x) {
  switch (order.m()) {
    case 2: return linear(x);
    case 3: return quadratic(x);
    default: return cubic(x);
  }
}

}  // namespace rwpnn
