#include "cosexp_identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/planar_nc.hpp"

namespace identity {

namespace {

using pnc::cosexp::f_closed;

std::vector<double> row(int n, double y) {
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) f[static_cast<std::size_t>(k)] = f_closed(n, k, y);
  return f;
}

double angle(int l, int n) { return std::numbers::pi * (2 * l - 1) / n; }

double scaled(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

double sum_of_squares(int n, double y) {
  double lhs = 0.0;
  for (double f : row(n, y)) lhs += f * f;
  double rhs = 0.0;
  for (int l = 1; l <= n; ++l) rhs += std::exp(2.0 * y * std::cos(angle(l, n)));
  return scaled(lhs, rhs / n);
}

double alternating_squares(int n, double y) {
  const auto f = row(n, y);
  double lhs = 0.0;
  for (int k = 0; k < n; ++k) lhs += (k % 2 == 0 ? 1.0 : -1.0) * f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(k)];
  double rhs = 0.0;
  for (int l = 1; l <= n / 4; ++l) rhs += std::cos(2.0 * y * std::cos(angle(l, n)));
  return scaled(lhs, 4.0 * rhs / n);
}

double addition(int n, double y, double z) {
  // The signed convolution is polynomial multiplication mod x^n + 1.
  const auto conv = oracle::poly_mod_mul(row(n, y), row(n, z));
  const auto direct = row(n, y + z);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    worst = std::max(worst, scaled(conv[static_cast<std::size_t>(k)], direct[static_cast<std::size_t>(k)]));
  }
  return worst;
}

double inverse_pair(int n, double y) {
  const auto conv = oracle::poly_mod_mul(row(n, y), row(n, -y));
  double worst = std::abs(conv[0] - 1.0);
  for (int k = 1; k < n; ++k) worst = std::max(worst, std::abs(conv[static_cast<std::size_t>(k)]));
  double size = 1.0;
  for (double f : row(n, std::abs(y))) size = std::max(size, f * f);
  return worst / size;
}

double power(int n, double y) {
  const pnc::PlanarNC base(n, row(n, y));
  pnc::PlanarNC p = base;
  double worst = 0.0;
  for (int l = 1; l <= 5; ++l) {
    if (l > 1) p = pnc::mul(p, base);
    const pnc::PlanarNC expected(n, row(n, l * y));
    worst = std::max(worst, pnc::max_abs_diff(p, expected) / std::max(1.0, pnc::modulus(expected)));
  }
  return worst;
}

double g_product(int n, double y) {
  const auto s = pnc::cosexp::ab_sums(n, y);
  double prod = 1.0;
  for (int p = 0; p < n / 2; ++p) prod *= s.g2[static_cast<std::size_t>(p)];
  return std::abs(prod - 1.0);
}

double derivative_chain(int n, double y) {
  constexpr double h = 1e-3;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    auto d = [&](double step) {
      return (f_closed(n, k, y + step) - f_closed(n, k, y - step)) / (2.0 * step);
    };
    const double deriv = (4.0 * d(h / 2) - d(h)) / 3.0;
    const double expected = k == 0 ? -f_closed(n, n - 1, y) : f_closed(n, k - 1, y);
    worst = std::max(worst, scaled(deriv, expected));
  }
  return worst;
}

}  // namespace identity
