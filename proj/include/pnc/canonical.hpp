#pragma once

// The fixed orthogonal change of basis that splits the algebra into n/2
// independent planes, each multiplying like ordinary complex numbers, plus
// the polar, exponential and trigonometric forms built on top of it.

#include <optional>
#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc {

/// Coordinates (v_k, vt_k) of one plane.
struct Plane {
  double v = 0.0;
  double vt = 0.0;
  bool operator==(const Plane&) const = default;
};

struct CanonicalCoords {
  int n = 0;
  std::vector<Plane> planes;  // n/2 entries, plane k at index k-1
};

/// cos and sin of pi (2k-1) p / n for k = 1..n/2, p = 0..n-1, stored
/// row-major by plane. Built once per n and shared.
struct TrigTable {
  int n = 0;
  std::vector<double> cos;
  std::vector<double> sin;

  double c(int k, int p) const { return cos[static_cast<std::size_t>((k - 1) * n + p)]; }
  double s(int k, int p) const { return sin[static_cast<std::size_t>((k - 1) * n + p)]; }
};

const TrigTable& trig_table(int n);

/// The idempotent / anti-idempotent pairs e_k, et_k (k = 1..n/2).
struct CanonicalBasis {
  int n = 0;
  std::vector<PlanarNC> e;
  std::vector<PlanarNC> et;
};

/// Cached per n; the returned reference stays valid for the program's life.
const CanonicalBasis& canonical_basis(int n);

CanonicalCoords to_canonical(const PlanarNC& u);
PlanarNC from_canonical(const CanonicalCoords& c);

/// Per-plane complex product.
CanonicalCoords mul_canonical(const CanonicalCoords& a, const CanonicalCoords& b);

/// Product routed through the canonical planes. Used to cross-check mul()
/// and as the cheaper path when a value is reused across many products.
PlanarNC mul_via_canonical(const PlanarNC& u, const PlanarNC& v);

/// rho_k for every plane.
std::vector<double> plane_radii(const PlanarNC& u);

/// 1-based indices of planes with rho_k <= tol * max(1, |u|).
std::vector<int> nodal_planes(const PlanarNC& u, double tol = kDefaultNodalTolerance);

struct PolarForm {
  double d = 0.0;
  double rho = 0.0;
  std::vector<double> rho_k;
  /// Azimuth in [0, 2pi); empty on a nodal plane.
  std::vector<std::optional<double>> phi_k;
  /// psi_{k-1} = atan2(rho_1, rho_k) for k = 2..n/2.
  std::vector<double> psi;
  /// 1-based nodal planes (those whose azimuth is undefined).
  std::vector<int> nodal;

  /// Azimuth of plane k (1-based); throws NodalSingularity on a nodal plane.
  double phi(int k) const;
};

PolarForm polar_form(const PlanarNC& u, double tol = kDefaultNodalTolerance);

/// u = rho * exp(h_part) * exp(phase_part) where h_part carries the planar
/// angles through ln tan psi and phase_part = sum_k et_k phi_k.
struct ExponentialForm {
  double rho = 0.0;
  PlanarNC h_part;
  PlanarNC phase_part;
};

ExponentialForm exponential_form(const PlanarNC& u, double tol = kDefaultNodalTolerance);

/// u = d * scale * direction * exp(phase) with
///   direction = e_1 + sum_{k>=2} e_k / tan psi_{k-1}
///   scale     = sqrt(n/2) (1 + sum 1/tan^2 psi)^(-1/2)
struct TrigonometricForm {
  double d = 0.0;
  double scale = 0.0;
  PlanarNC direction;
  PlanarNC phase;
};

TrigonometricForm trigonometric_form(const PlanarNC& u, double tol = kDefaultNodalTolerance);

/// Modulus recovered from the amplitude and the planar angles:
///   d = sqrt(2/n) rho (prod tan psi)^(2/n) (1 + sum 1/tan^2 psi)^(1/2).
double modulus_from_amplitude(int n, double rho, const std::vector<double>& psi);

}  // namespace pnc
