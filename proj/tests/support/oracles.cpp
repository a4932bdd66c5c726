#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

Coeffs poly_mod_mul(const Coeffs& x, const Coeffs& y) {
  const std::size_t n = x.size();
  std::vector<double> full(2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) full[i + j] += x[i] * y[j];
  }
  Coeffs r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = full[i] - full[i + n];
  return r;
}

Eigen::MatrixXd mult_matrix(const Coeffs& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Coeffs e(u.size(), 0.0);
    e[static_cast<std::size_t>(c)] = 1.0;
    const Coeffs col = poly_mod_mul(u, e);
    for (Eigen::Index r = 0; r < n; ++r) m(r, c) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

double determinant(const Coeffs& u) { return mult_matrix(u).fullPivLu().determinant(); }

Coeffs inverse(const Coeffs& u) {
  Eigen::VectorXd one = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(u.size()));
  one(0) = 1.0;
  const Eigen::VectorXd v = mult_matrix(u).fullPivLu().solve(one);
  return Coeffs(v.data(), v.data() + v.size());
}

namespace {

Coeffs taylor(const Coeffs& u, int start, int stride, double sign) {
  // sum_j sign^j u^(start + stride j) / (start + stride j)!
  const std::size_t n = u.size();
  Coeffs sum(n, 0.0);
  Coeffs term(n, 0.0);
  term[0] = 1.0;
  for (int p = 1; p <= start; ++p) {
    term = poly_mod_mul(term, u);
    for (double& t : term) t /= p;
  }
  int power = start;
  double s = 1.0;
  for (int j = 0; j < 200; ++j) {
    for (std::size_t i = 0; i < n; ++i) sum[i] += s * term[i];
    for (int q = 0; q < stride; ++q) {
      term = poly_mod_mul(term, u);
      ++power;
      for (double& t : term) t /= power;
    }
    s *= sign;
    if (norm(term) < 1e-300) break;
  }
  return sum;
}

}  // namespace

Coeffs exp_series(const Coeffs& u) {
  int squarings = 0;
  double scale = 1.0;
  while (norm(u) * scale > 0.5) {
    scale /= 2.0;
    ++squarings;
  }
  Coeffs small = u;
  for (double& x : small) x *= scale;
  Coeffs e = taylor(small, 0, 1, 1.0);
  for (int i = 0; i < squarings; ++i) e = poly_mod_mul(e, e);
  return e;
}

Coeffs cos_series(const Coeffs& u) { return taylor(u, 0, 2, -1.0); }
Coeffs sin_series(const Coeffs& u) { return taylor(u, 1, 2, -1.0); }

namespace {

double series(int n, int k, double y, long double sign) {
  long double term = 1.0L;
  for (int j = 1; j <= k; ++j) term *= static_cast<long double>(y) / j;
  long double sum = 0.0L;
  int power = k;
  long double s = 1.0L;
  for (int p = 0; p < 400; ++p) {
    sum += s * term;
    for (int q = 0; q < n; ++q) {
      ++power;
      term *= static_cast<long double>(y) / power;
    }
    s *= sign;
    if (term == 0.0L) break;
  }
  return static_cast<double>(sum);
}

}  // namespace

double cosexp_series(int n, int k, double y) { return series(n, k, y, -1.0L); }
double cosexp_plus_series(int n, int k, double y) { return series(n, k, y, 1.0L); }

int ray_parity(double px, double py, const std::vector<std::pair<double, double>>& loop,
               double theta) {
  // Rotate so the ray points along +x, then count edges straddling y = 0
  // whose crossing lies ahead of the point.
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  int crossings = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto [ax0, ay0] = loop[i];
    const auto [bx0, by0] = loop[(i + 1) % loop.size()];
    const double ax = c * (ax0 - px) + s * (ay0 - py);
    const double ay = -s * (ax0 - px) + c * (ay0 - py);
    const double bx = c * (bx0 - px) + s * (by0 - py);
    const double by = -s * (bx0 - px) + c * (by0 - py);
    if ((ay > 0.0) == (by > 0.0)) continue;
    const double x = ax + (0.0 - ay) * (bx - ax) / (by - ay);
    if (x > 0.0) ++crossings;
  }
  return crossings % 2;
}

std::vector<std::complex<double>> complex_from_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t l = c.size() - 1; l > 0; --l) c[l] -= c[l - 1] * r;
  }
  c.erase(c.begin());
  return c;
}

double max_diff(const Coeffs& a, const Coeffs& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double norm(const Coeffs& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

}  // namespace oracle
