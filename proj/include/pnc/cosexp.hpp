#pragma once

// Planar cosexponential functions
//   f_nk(y) = sum_{p>=0} (-1)^p y^(k+pn) / (k+pn)!
// and their all-plus counterparts g_nk (the components of exp(h_k y) for
// even k). Defined for every natural n, not only even n.

#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc::cosexp {

inline constexpr double kSeriesTolerance = 1e-16;
inline constexpr int kMaxSeriesTerms = 500;

struct ComplexPair {
  double re = 0.0;
  double im = 0.0;
};

/// Truncated series; stops once |term| < tol (1 + |partial|) after at least
/// three terms, or after kMaxSeriesTerms terms.
double f_series(int n, int k, double y, double tol = kSeriesTolerance);

/// (1/n) sum_{l=1}^{n} exp[y cos a_l] cos[y sin a_l - a_l k], a_l = pi(2l-1)/n.
double f_closed(int n, int k, double y);

/// g_nk(y) = sum_{p>=0} y^(k+pn) / (k+pn)!, by truncated series.
double g_polar(int n, int k, double y, double tol = kSeriesTolerance);

/// f_nk at a complex argument, by truncated series.
ComplexPair f_complex(int n, int k, double re, double im, double tol = kSeriesTolerance);
/// g_nk at a complex argument, by truncated series.
ComplexPair g_complex(int n, int k, double re, double im, double tol = kSeriesTolerance);

/// Closed-form sums over the n-th roots of -1 (for f) or of 1 (for g),
/// valid for complex arguments:
///   f_nk(z) = (1/n) sum_l exp(w_l z) w_l^(-k),  w_l^n = -1
///   g_nk(z) = (1/n) sum_l exp(z_l z) z_l^(-k),  z_l^n = 1
ComplexPair f_closed_complex(int n, int k, double re, double im);
ComplexPair g_closed_complex(int n, int k, double re, double im);

/// All n components f_n0(y) .. f_n,n-1(y) from the closed form.
std::vector<double> f_all(int n, double y);

/// exp(h_k y) for an even-dimensional algebra: f_np for odd k, g_np for even k.
PlanarNC exp_hk(int n, int k, double y);

struct AbSums {
  std::vector<double> a;   // a_k, k = 1..n
  std::vector<double> b;   // b_k, k = 1..n
  std::vector<double> g2;  // G_k^2 = a_k^2 + b_k^2
};

/// a_k = sum_p f_np(y) cos(pi(2k-1)p/n), b_k likewise with sin.
AbSums ab_sums(int n, double y);

}  // namespace pnc::cosexp
