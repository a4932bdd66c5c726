#include "pnc/planar_nc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "pnc/canonical.hpp"
#include "pnc/detail/product.hpp"
#include "pnc/error.hpp"

namespace pnc {

namespace {

void require_same_dim(const PlanarNC& u, const PlanarNC& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

std::vector<double> checked(std::vector<double> x, const char* op) {
  for (double xi : x) {
    if (!std::isfinite(xi)) throw Overflow(std::string(op) + ": result is not finite");
  }
  return x;
}

}  // namespace

NodalSingularity::NodalSingularity(std::vector<int> planes)
    : DomainError([&] {
        std::string msg = "nodal singularity on plane(s)";
        for (int k : planes) msg += " " + std::to_string(k);
        return msg;
      }()),
      planes_(std::move(planes)) {}

void require_even_dimension(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("dimension must be even and >= 2, got " + std::to_string(n));
  }
}

PlanarNC::PlanarNC(int n) : n_(n) {
  require_even_dimension(n);
  x_.assign(static_cast<std::size_t>(n), 0.0);
}

PlanarNC::PlanarNC(int n, std::vector<double> coeffs) : n_(n), x_(std::move(coeffs)) {
  require_even_dimension(n);
  if (x_.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("expected " + std::to_string(n) + " coefficients, got " +
                          std::to_string(x_.size()));
  }
  for (double xi : x_) {
    if (!std::isfinite(xi)) throw InvalidArgument("coefficients must be finite");
  }
}

PlanarNC PlanarNC::one(int n) { return scalar(n, 1.0); }

PlanarNC PlanarNC::scalar(int n, double c) {
  PlanarNC u(n);
  u.x_[0] = c;
  if (!std::isfinite(c)) throw InvalidArgument("coefficients must be finite");
  return u;
}

PlanarNC PlanarNC::basis(int n, int p) {
  PlanarNC u(n);
  if (p < 0 || p >= n) throw InvalidArgument("basis index out of range");
  u.x_[static_cast<std::size_t>(p)] = 1.0;
  return u;
}

BasisProduct basis_product(int j, int k, int n) {
  require_even_dimension(n);
  if (j < 0 || j >= n || k < 0 || k >= n) throw InvalidArgument("basis index out of range");
  const int wraps = (j + k) / n;
  return {wraps % 2 == 0 ? 1 : -1, j + k - n * wraps};
}

PlanarNC add(const PlanarNC& u, const PlanarNC& v) {
  require_same_dim(u, v);
  std::vector<double> r(u.coeffs().begin(), u.coeffs().end());
  for (int p = 0; p < u.dim(); ++p) r[static_cast<std::size_t>(p)] += v[p];
  return PlanarNC(u.dim(), checked(std::move(r), "add"));
}

PlanarNC sub(const PlanarNC& u, const PlanarNC& v) {
  require_same_dim(u, v);
  std::vector<double> r(u.coeffs().begin(), u.coeffs().end());
  for (int p = 0; p < u.dim(); ++p) r[static_cast<std::size_t>(p)] -= v[p];
  return PlanarNC(u.dim(), checked(std::move(r), "sub"));
}

PlanarNC negate(const PlanarNC& u) { return scale(u, -1.0); }

PlanarNC scale(const PlanarNC& u, double c) {
  std::vector<double> r(u.coeffs().begin(), u.coeffs().end());
  for (double& x : r) x *= c;
  return PlanarNC(u.dim(), checked(std::move(r), "scale"));
}

PlanarNC mul(const PlanarNC& u, const PlanarNC& v) {
  require_same_dim(u, v);
  const int n = u.dim();
  const auto x = u.coeffs();
  const auto y = v.coeffs();
  std::vector<double> r(static_cast<std::size_t>(n), 0.0);
  detail::negacyclic_product(x.data(), y.data(), r.data(), n);
  return PlanarNC(n, checked(std::move(r), "mul"));
}

double determinant(const PlanarNC& u) {
  double nu = 1.0;
  for (double r : plane_radii(u)) nu *= r * r;
  return nu;
}

double amplitude(const PlanarNC& u) {
  // Product of n-th roots avoids under/overflow of nu itself.
  double rho = 1.0;
  const double e = 2.0 / u.dim();
  for (double r : plane_radii(u)) rho *= std::pow(r, e);
  return rho;
}

double modulus(const PlanarNC& u) {
  double s = 0.0;
  for (double x : u.coeffs()) s += x * x;
  return std::sqrt(s);
}

PlanarNC inverse(const PlanarNC& u, double tol) {
  if (auto bad = nodal_planes(u, tol); !bad.empty()) throw NodalSingularity(std::move(bad));
  CanonicalCoords c = to_canonical(u);
  for (Plane& pl : c.planes) {
    const std::complex<double> z = 1.0 / std::complex<double>(pl.v, pl.vt);
    pl = {z.real(), z.imag()};
  }
  return from_canonical(c);
}

double max_abs_diff(const PlanarNC& u, const PlanarNC& v) {
  require_same_dim(u, v);
  double m = 0.0;
  for (int p = 0; p < u.dim(); ++p) m = std::max(m, std::abs(u[p] - v[p]));
  return m;
}

}  // namespace pnc
