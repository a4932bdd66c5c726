#include "pnc/cosexp.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "pnc/error.hpp"

namespace pnc::cosexp {

namespace {

using cd = std::complex<double>;

void require_index(int n, int k) {
  if (n < 1) throw InvalidArgument("cosexponential order must be >= 1");
  if (k < 0 || k >= n) throw InvalidArgument("cosexponential index out of range");
}

// sum_{p>=0} s^p z^(k+pn)/(k+pn)!, s = -1 for f and +1 for g.
template <typename T>
T cosexp_series(int n, int k, T z, double sign, double tol) {
  T term = T(1.0);
  for (int j = 1; j <= k; ++j) term *= z / static_cast<double>(j);
  T partial = T(0.0);
  for (int p = 0; p < kMaxSeriesTerms; ++p) {
    partial += term;
    const int base = k + p * n;
    T next = term * sign;
    for (int j = base + 1; j <= base + n; ++j) next *= z / static_cast<double>(j);
    if (p >= 2 && std::abs(next) < tol * (1.0 + std::abs(partial))) break;
    term = next;
  }
  return partial;
}

// Angle pi * a / n with the integer index reduced mod 2n first.
double angle(int a, int n) {
  const int r = ((a % (2 * n)) + 2 * n) % (2 * n);
  return std::numbers::pi * r / n;
}

// (1/n) sum over roots r with r^n = (odd ? -1 : 1) of exp(r z) r^(-k).
cd root_sum(int n, int k, cd z, bool odd_roots) {
  cd acc = 0.0;
  for (int l = 0; l < n; ++l) {
    // Root angle is pi * m / n with m = 2l+1 (roots of -1) or 2l (roots of 1).
    const int m = odd_roots ? 2 * l + 1 : 2 * l;
    const double a = angle(m, n);
    const cd r(std::cos(a), std::sin(a));
    const double ak = angle(m * k, n);
    acc += std::exp(r * z) * cd(std::cos(ak), -std::sin(ak));
  }
  return acc / static_cast<double>(n);
}

}  // namespace

double f_series(int n, int k, double y, double tol) {
  require_index(n, k);
  return cosexp_series<double>(n, k, y, -1.0, tol);
}

double g_polar(int n, int k, double y, double tol) {
  require_index(n, k);
  return cosexp_series<double>(n, k, y, 1.0, tol);
}

double f_closed(int n, int k, double y) {
  require_index(n, k);
  // The root sum reaches f_nk(0) = [k == 0] only up to rounding.
  if (y == 0.0) return k == 0 ? 1.0 : 0.0;
  double acc = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double a = angle(2 * l - 1, n);
    acc += std::exp(y * std::cos(a)) * std::cos(y * std::sin(a) - angle((2 * l - 1) * k, n));
  }
  return acc / n;
}

ComplexPair f_complex(int n, int k, double re, double im, double tol) {
  require_index(n, k);
  const cd r = cosexp_series<cd>(n, k, cd(re, im), -1.0, tol);
  return {r.real(), r.imag()};
}

ComplexPair g_complex(int n, int k, double re, double im, double tol) {
  require_index(n, k);
  const cd r = cosexp_series<cd>(n, k, cd(re, im), 1.0, tol);
  return {r.real(), r.imag()};
}

ComplexPair f_closed_complex(int n, int k, double re, double im) {
  require_index(n, k);
  const cd r = root_sum(n, k, cd(re, im), true);
  return {r.real(), r.imag()};
}

ComplexPair g_closed_complex(int n, int k, double re, double im) {
  require_index(n, k);
  const cd r = root_sum(n, k, cd(re, im), false);
  return {r.real(), r.imag()};
}

std::vector<double> f_all(int n, double y) {
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) f[static_cast<std::size_t>(k)] = f_closed(n, k, y);
  return f;
}

PlanarNC exp_hk(int n, int k, double y) {
  require_even_dimension(n);
  if (k < 0 || k >= n) throw InvalidArgument("basis index out of range");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int p = 0; p < n; ++p) {
    const double value = k % 2 == 1 ? f_closed(n, p, y) : g_closed_complex(n, p, y, 0.0).re;
    const int wraps = (k * p) / n;
    const int index = k * p - n * wraps;
    x[static_cast<std::size_t>(index)] += wraps % 2 == 0 ? value : -value;
  }
  return PlanarNC(n, std::move(x));
}

AbSums ab_sums(int n, double y) {
  if (n < 1) throw InvalidArgument("cosexponential order must be >= 1");
  const auto f = f_all(n, y);
  AbSums s;
  for (int k = 1; k <= n; ++k) {
    double a = 0.0;
    double b = 0.0;
    for (int p = 0; p < n; ++p) {
      const double t = angle((2 * k - 1) * p, n);
      a += f[static_cast<std::size_t>(p)] * std::cos(t);
      b += f[static_cast<std::size_t>(p)] * std::sin(t);
    }
    s.a.push_back(a);
    s.b.push_back(b);
    s.g2.push_back(a * a + b * b);
  }
  return s;
}

}  // namespace pnc::cosexp
