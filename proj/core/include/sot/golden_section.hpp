#pragma once

#include <cmath>

namespace sot {

struct LineMaximum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal (here: concave)
/// function on [lo, hi], stopping once the bracket is narrower than `tol`.
/// Only interior points are evaluated, so f may be -inf at lo or hi.
template <typename F>
LineMaximum golden_section_maximize(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    }
  }
  return fc < fd ? LineMaximum{d, fd} : LineMaximum{c, fc};
}

}  // namespace sot
