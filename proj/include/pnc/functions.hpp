#pragma once

// Elementary transcendental functions of a planar n-complex variable. Every
// function acts as the corresponding complex function on each canonical
// plane independently; results are mapped back to coefficient space.

#include "pnc/canonical.hpp"
#include "pnc/planar_nc.hpp"

namespace pnc {

PlanarNC exp(const PlanarNC& u);

/// Principal logarithm sum_k (e_k ln rho_k + et_k phi_k), phi_k in [0, 2pi).
PlanarNC ln(const PlanarNC& u, double tol = kDefaultNodalTolerance);

/// u^m. Non-negative integer exponents use repeated multiplication and accept
/// any u; all other exponents use the principal branch and require every
/// plane to be regular.
PlanarNC pow(const PlanarNC& u, double m, double tol = kDefaultNodalTolerance);

PlanarNC cos(const PlanarNC& u);
PlanarNC sin(const PlanarNC& u);
PlanarNC cosh(const PlanarNC& u);
PlanarNC sinh(const PlanarNC& u);

struct TrigPair {
  PlanarNC cos;
  PlanarNC sin;
};

struct HypPair {
  PlanarNC cosh;
  PlanarNC sinh;
};

/// cos(h_k y), sin(h_k y) assembled from the complex-argument parts of the
/// cosexponential components.
TrigPair trig_of_axis(int n, int k, double y);
/// cosh(h_k y), sinh(h_k y) assembled from the even and odd parts of the
/// cosexponential components.
HypPair hyp_of_axis(int n, int k, double y);

/// rho * exp(h_part) * exp(phase_part).
PlanarNC reconstruct(const ExponentialForm& f);
/// d * scale * direction * exp(phase).
PlanarNC reconstruct(const TrigonometricForm& f);

}  // namespace pnc
