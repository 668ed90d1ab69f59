#pragma once

#include <cstddef>

namespace zeno {

/// Golden-section search for the maximizer of a unimodal f on [lo, hi].
/// Works with any ordered field type T (double, long double, __float128),
/// so the caller picks the precision that the comparison f(c) < f(d) needs.
/// Stops when the bracket is narrower than `tol` or after `max_iter`.
template <typename T, typename F>
T golden_section_maximize(F&& f, T lo, T hi, T tol, std::size_t max_iter = 500) {
  // 1/phi and 1/phi^2 to full double precision; exact values are not needed
  // for correctness, only for the bracket shrink ratio.
  const T inv_phi = T(0.6180339887498949);
  const T inv_phi2 = T(0.3819660112501051);

  T c = lo + inv_phi2 * (hi - lo);
  T d = lo + inv_phi * (hi - lo);
  T fc = f(c);
  T fd = f(d);
  for (std::size_t i = 0; i < max_iter && hi - lo > tol; ++i) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = lo + inv_phi2 * (hi - lo);
      fc = f(c);
    }
  }
  return (lo + hi) / T(2);
}

}  // namespace zeno
