#pragma once

// Reference computations written independently of the library's algorithms.
// They work in plain coefficient space (or via Eigen) and never touch the
// canonical transform.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pnc/planar_nc.hpp"

namespace oracle {

using Coeffs = std::vector<double>;

/// Schoolbook product of two degree < n polynomials, then reduction with
/// x^n = -1.
Coeffs poly_mod_mul(const Coeffs& x, const Coeffs& y);

/// Matrix of v -> u v acting on coefficient columns, built column by column
/// from poly_mod_mul.
Eigen::MatrixXd mult_matrix(const Coeffs& u);

double determinant(const Coeffs& u);

/// Solves (u v = 1) for v with a pivoted LU.
Coeffs inverse(const Coeffs& u);

/// Taylor series of exp in coefficient space, with scaling and squaring.
Coeffs exp_series(const Coeffs& u);
/// Taylor series of cos and sin in coefficient space (argument kept small
/// by the caller).
Coeffs cos_series(const Coeffs& u);
Coeffs sin_series(const Coeffs& u);

/// f_nk(y) by its defining alternating series in long double.
double cosexp_series(int n, int k, double y);
/// g_nk(y) by its all-plus series in long double.
double cosexp_plus_series(int n, int k, double y);

/// Ray casting along direction angle `theta`; counts crossings with the
/// closed polyline and returns their parity.
int ray_parity(double px, double py, const std::vector<std::pair<double, double>>& loop,
               double theta);

/// Coefficients c_1..c_m of prod (z - r).
std::vector<std::complex<double>> complex_from_roots(const std::vector<std::complex<double>>& roots);

double max_diff(const Coeffs& a, const Coeffs& b);
double norm(const Coeffs& a);

inline Coeffs coeffs(const pnc::PlanarNC& u) { return Coeffs(u.coeffs().begin(), u.coeffs().end()); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  Coeffs vec(int n, double scale = 1.0) {
    Coeffs x(static_cast<std::size_t>(n));
    for (double& v : x) v = uniform(-scale, scale);
    return x;
  }
  pnc::PlanarNC value(int n, double scale = 1.0) { return pnc::PlanarNC(n, vec(n, scale)); }

 private:
  std::mt19937_64 g_;
};

}  // namespace oracle
