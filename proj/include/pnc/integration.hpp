#pragma once

// Path integrals of n-complex functions, the interior/exterior functional
// on projected loops, and the residue and Cauchy-type formulas built on it.

#include <cstddef>
#include <functional>
#include <vector>

#include "pnc/canonical.hpp"
#include "pnc/planar_nc.hpp"

namespace pnc {

using Evaluator = std::function<PlanarNC(const PlanarNC&)>;
using Curve = std::function<PlanarNC(double)>;

/// Ordered samples u(t_0) .. u(t_M), M >= 2. When built from a curve the
/// quadrature refines by resampling the parameter; otherwise it subdivides
/// the straight segments between samples.
class SampledPath {
 public:
  SampledPath(int n, std::vector<PlanarNC> points, bool closed);

  /// Samples `curve` at M+1 evenly spaced parameters in [t0, t1].
  static SampledPath from_curve(int n, Curve curve, double t0, double t1, std::size_t segments,
                                bool closed);

  int dim() const noexcept { return n_; }
  bool closed() const noexcept { return closed_; }
  const std::vector<PlanarNC>& points() const noexcept { return points_; }
  std::size_t segments() const noexcept { return points_.size() - 1; }

  /// Point at fractional position s in [0, segments()].
  PlanarNC at(double s) const;

 private:
  int n_;
  std::vector<PlanarNC> points_;
  bool closed_;
  Curve curve_;
  double t0_ = 0.0;
  double t1_ = 1.0;
};

/// A closed loop whose projection on plane k is a circle of radius
/// radii[k-1] about center's plane-k image, traversed once
/// counterclockwise. A zero radius pins that projection to a point.
SampledPath plane_circles(const CanonicalCoords& center, const std::vector<double>& radii,
                          std::size_t segments);

struct QuadratureOptions {
  double rel_tol = 1e-8;
  std::size_t max_samples = std::size_t{1} << 20;
  /// Declared poles; a sample on a singular hypersurface through any of
  /// them is rejected with SingularPath.
  std::vector<PlanarNC> poles;
  double singular_tol = 1e-9;
  /// Evaluate f concurrently; f must then be safe to call from several threads.
  bool parallel = false;
};

/// Midpoint-value quadrature of the integral of f(u) du along the path,
/// refined dyadically until successive estimates agree, then Richardson
/// extrapolated. Throws NonConvergence when max_samples is exhausted.
PlanarNC line_integral(const Evaluator& f, const SampledPath& path,
                       const QuadratureOptions& opts = {});

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kBoundaryTolerance = 1e-9;

/// 1 when the point is inside the closed polyline (odd crossing count of a
/// horizontal ray), 0 otherwise. Throws OnBoundary within
/// rel_tol * diameter of the polyline.
int winding(Point2 point, const std::vector<Point2>& loop, double rel_tol = kBoundaryTolerance);

/// Projection of u on plane k (1-based).
Point2 plane_projection(const PlanarNC& u, int k);

/// int(u0_k, Gamma_k) for every plane.
std::vector<int> plane_windings(const PlanarNC& u0, const SampledPath& loop);

struct ResidueResult {
  PlanarNC value;
  std::vector<int> winding;
};

/// Closed-loop integral of du / (u - u0) from the projected windings:
/// 2 pi sum_k et_k int_k.
ResidueResult residue_integral(const PlanarNC& u0, const SampledPath& loop);

struct CauchyResult {
  /// Quadrature of f(u) du / (u - u0) around the loop.
  PlanarNC quadrature;
  /// 2 pi f(u0) sum_k et_k int_k.
  PlanarNC formula;
  std::vector<int> winding;
  /// Sum of the coefficients of the quadrature value.
  double component_sum = 0.0;
};

CauchyResult cauchy_value(const Evaluator& f, const PlanarNC& u0, const SampledPath& loop,
                          const QuadratureOptions& opts = {});

/// Coefficient-wise evaluation of 2 pi f(u0) sum_k et_k int_k:
///   I_l = 2 pi (2/n) sum_k int_k sum_{p=1}^{n-1} s_lp sin(pi(2k-1)p/n) P_{(l-p) mod n}(u0)
/// with s_lp = -1 when p > l.
PlanarNC cauchy_components(const PlanarNC& f_u0, const std::vector<int>& winding);

/// 2 pi / m! f^(m)(u0) sum_k et_k int_k, the closed-loop integral of
/// f(u) du / (u - u0)^(m+1).
PlanarNC higher_order_formula(const PlanarNC& derivative_at_u0, int m,
                              const std::vector<int>& winding);

struct Pole {
  PlanarNC location;
  PlanarNC residue;
};

/// 2 pi sum_l sum_k et_k int(u_l,k, Gamma_k) r_l.
PlanarNC residue_sum(const std::vector<Pole>& poles, const SampledPath& loop);

}  // namespace pnc
