#pragma once

#include "rwpnn/errors.hpp"

namespace rwpnn {

//! Order of the B-spline scaling function. Only the closed-form orders are
//! supported: 2 (linear), 3 (quadratic), 4 (cubic). The boundary pad u is a
//! pure function of the order, so it is derived rather than stored.
class SplineOrder {
public:
  static SplineOrder of(int m) {
    if (m < 2 || m > 4)
      throw ContractViolation("spline order must be 2, 3 or 4, got " +
                              std::to_string(m));
    return SplineOrder(m);
  }

  static SplineOrder linear() { return SplineOrder(2); }
  static SplineOrder quadratic() { return SplineOrder(3); }
  static SplineOrder cubic() { return SplineOrder(4); }

  int m() const { return m_; }
  //! Boundary pad u: one extra translation per side for orders 2 and 3,
  //! two for order 4.
  int boundary_pad() const { return m_ == 4 ? 2 : 1; }

  bool operator==(const SplineOrder& other) const { return m_ == other.m_; }

private:
  explicit SplineOrder(int m) : m_(m) {}
  int m_;
};

//! N_m(x): m-th order cardinal B-spline evaluated via its piecewise
//! polynomial closed form. Zero outside [0, m], nonnegative everywhere.
double bspline_eval(SplineOrder order, double x);

}  // namespace rwpnn
