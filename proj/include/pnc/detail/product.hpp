#pragma once

#include <cstddef>

namespace pnc::detail {

/// r = x * y in R[h]/(h^n + 1). Output coefficient k visits the pair
/// {l, (k-l) mod n} once, at its smaller index, so swapping x and y
/// leaves every rounding step unchanged.
inline void negacyclic_product(const double* x, const double* y, double* r, int n) {
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int l = 0; l < n; ++l) {
      const int m = l <= k ? k - l : k - l + n;
      if (m < l) continue;
      // l > k wraps past h_{n-1}; so does its partner m.
      const double sign = l <= k ? 1.0 : -1.0;
      const double t_l = x[l] * y[m];
      if (m == l) {
        acc += sign * t_l;
      } else {
        acc += sign * (t_l + x[m] * y[l]);
      }
    }
    r[k] = acc;
  }
}

}  // namespace pnc::detail
