#pragma once

// Monic polynomials with n-complex coefficients, factored into linear
// factors by finding complex roots plane by plane and reassembling them.

#include <complex>
#include <cstddef>
#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc {

/// P(u) = u^m + a_1 u^(m-1) + ... + a_m.
class NPolynomial {
 public:
  /// Takes a_1..a_m of a monic polynomial.
  NPolynomial(int n, std::vector<PlanarNC> coeffs);

  /// b_0 u^m + b_1 u^(m-1) + ... + b_m, divided through by b_0. Throws
  /// InvalidArgument when b_0 lies on a nodal hypersurface.
  static NPolynomial normalized(int n, const std::vector<PlanarNC>& with_leading);

  /// prod_p (u - u_p).
  static NPolynomial from_roots(int n, const std::vector<PlanarNC>& roots);

  int dim() const noexcept { return n_; }
  int degree() const noexcept { return static_cast<int>(a_.size()); }
  /// a_1..a_m.
  const std::vector<PlanarNC>& coeffs() const noexcept { return a_; }

 private:
  int n_;
  std::vector<PlanarNC> a_;
};

/// Monic complex polynomial z^m + c_1 z^(m-1) + ... + c_m, stored as c_1..c_m.
using ComplexPoly = std::vector<std::complex<double>>;

PlanarNC eval_poly(const NPolynomial& p, const PlanarNC& u);
std::complex<double> eval_poly(const ComplexPoly& c, std::complex<double> z);

/// Plane k (index k-1) gets c_l = v_k(a_l) + i vt_k(a_l).
std::vector<ComplexPoly> project_to_planes(const NPolynomial& p);

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 1000;

/// All m roots by simultaneous (Aberth) iteration, stopping when every
/// correction is below tol * max(1, |z|). Throws NonConvergence after
/// max_iter sweeps unless the residuals are already at rounding level.
std::vector<std::complex<double>> roots_per_plane(const ComplexPoly& c,
                                                  double tol = kRootTolerance,
                                                  int max_iter = kRootMaxIterations);

struct RootAssembly {
  /// per_plane_roots[k-1][p] pairs with the other planes' p-th roots.
  std::vector<std::vector<std::complex<double>>> per_plane_roots;
  /// u_p = sum_k (e_k v_kp + et_k vt_kp).
  std::vector<PlanarNC> assembled_roots;
  /// Number of distinct root multisets over all pairings.
  std::size_t assembly_count = 0;
};

inline constexpr double kRootClusterTolerance = 1e-7;
inline constexpr std::size_t kDefaultEnumerateLimit = 64;

/// Up to enumerate_limit distinct assemblies, the canonical one first (each
/// plane's roots sorted by angle in [0, 2pi) then modulus, paired by index).
/// Further assemblies reorder planes 2..n/2 in mixed-radix order with plane 1
/// fixed. With enumerate_all, a count above enumerate_limit throws
/// AssemblyOverflow instead of truncating.
std::vector<RootAssembly> factor(const NPolynomial& p,
                                 std::size_t enumerate_limit = kDefaultEnumerateLimit,
                                 bool enumerate_all = false);

/// Largest coefficient difference between prod (u - u_p) and p.
double reexpansion_error(const NPolynomial& p, const RootAssembly& a);

}  // namespace pnc
