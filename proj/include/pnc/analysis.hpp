#pragma once

// Power series over the algebra: convergence radii, evaluation, term-wise
// derivative and re-expansion, and a finite-difference check of the
// Riemann-type relations between component partials.

#include <functional>
#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc {

/// Truncated power series a_0 + a_1 u + ... + a_L u^L.
class NCSeries {
 public:
  NCSeries(int n, std::vector<PlanarNC> coeffs);

  int dim() const noexcept { return n_; }
  const std::vector<PlanarNC>& coeffs() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }

  /// sum_{l<=L} u^l / l!
  static NCSeries exponential(int n, std::size_t terms);

 private:
  int n_;
  std::vector<PlanarNC> a_;
};

/// Number of trailing coefficient ratios combined by the radius estimators.
inline constexpr int kRadiusTailRatios = 5;
/// Any tail ratio above this is taken as an infinite radius.
inline constexpr double kInfiniteRatio = 1e12;

/// Estimate of c = lim |a_l| / (sqrt(n/2) |a_{l+1}|); the series converges
/// absolutely for |u| < c. Throws UndefinedRadius when fewer than two
/// trailing coefficients are nonzero.
double radius_global(const NCSeries& s);

/// Per-plane radii c_k from the plane magnitudes of the coefficients; the
/// series converges when rho_k(u) < c_k for every k. Planes whose trailing
/// coefficients vanish report +infinity.
std::vector<double> radius_per_plane(const NCSeries& s);

struct SeriesEvaluation {
  PlanarNC value;
  /// 1-based planes where rho_k(u) >= c_k (empty when u is inside the cylinder).
  std::vector<int> divergent_planes;
};

/// Sums the series plane by plane.
SeriesEvaluation eval_series(const NCSeries& s, const PlanarNC& u);

NCSeries derivative_series(const NCSeries& s);

/// Coefficients of the same function expanded in powers of (u - u0):
///   c_k = sum_l C(k+l, k) a_{k+l} u0^l.
NCSeries taylor_shift(const NCSeries& s, const PlanarNC& u0);

using Evaluator = std::function<PlanarNC(const PlanarNC&)>;

struct CrReport {
  int n = 0;
  /// jacobian[k * n + l] = dP_k / dx_l by central differences.
  std::vector<double> jacobian;
  /// Largest violation of the first-order relations between partials.
  double first_order_residual = 0.0;
  /// Largest violation of the second-order relations between mixed partials.
  double second_order_residual = 0.0;
  double step = 0.0;
  double second_step = 0.0;
};

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kDefaultSecondFdStep = 1e-4;

/// Central-difference check of
///   dP_k/dx_0 = dP_{k+1}/dx_1 = ... = -dP_0/dx_{n-k} = ... = -dP_{k-1}/dx_{n-1}
/// and of the matching second-order equalities.
CrReport cr_check(const Evaluator& f, const PlanarNC& u0, double h = kDefaultFdStep,
                  double h2 = kDefaultSecondFdStep);

}  // namespace pnc
