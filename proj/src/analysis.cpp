#include "pnc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "pnc/canonical.hpp"
#include "pnc/error.hpp"

namespace pnc {

namespace {

using cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Limit estimate of m_l / m_{l+1} from the tail of a magnitude sequence.
// Empty when fewer than two trailing magnitudes are nonzero.
std::optional<double> tail_ratio_limit(const std::vector<double>& m) {
  std::vector<double> ratios;
  for (std::size_t l = m.size(); l >= 2 && ratios.size() < kRadiusTailRatios; --l) {
    const double hi = m[l - 2];
    const double lo = m[l - 1];
    if (hi == 0.0 || lo == 0.0) break;
    ratios.push_back(hi / lo);
  }
  if (ratios.empty()) return std::nullopt;
  std::reverse(ratios.begin(), ratios.end());

  if (std::any_of(ratios.begin(), ratios.end(), [](double r) { return r > kInfiniteRatio; })) {
    return kInf;
  }
  // Ratios that keep climbing by non-shrinking steps (factorial-like decay)
  // have no finite limit.
  if (ratios.size() >= 3) {
    bool unbounded = true;
    for (std::size_t j = 0; j + 1 < ratios.size() && unbounded; ++j) {
      const double step = ratios[j + 1] - ratios[j];
      if (step <= 1e-8 * ratios[j]) unbounded = false;
      if (j > 0 && step < (ratios[j] - ratios[j - 1]) * (1.0 - 1e-6)) unbounded = false;
    }
    if (unbounded) return kInf;
  }
  double log_sum = 0.0;
  for (double r : ratios) log_sum += std::log(r);
  return std::exp(log_sum / static_cast<double>(ratios.size()));
}

// Plane images of the coefficients. Plane magnitudes at or below 1e-12 of
// the coefficient's largest plane are transform rounding and are zeroed.
std::vector<CanonicalCoords> plane_images(const NCSeries& s) {
  std::vector<CanonicalCoords> out;
  out.reserve(s.size());
  for (const PlanarNC& a : s.coeffs()) {
    CanonicalCoords c = to_canonical(a);
    double scale = 0.0;
    for (const Plane& pl : c.planes) scale = std::max(scale, std::hypot(pl.v, pl.vt));
    for (Plane& pl : c.planes) {
      if (std::hypot(pl.v, pl.vt) <= 1e-12 * scale) pl = {};
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

NCSeries::NCSeries(int n, std::vector<PlanarNC> coeffs) : n_(n), a_(std::move(coeffs)) {
  require_even_dimension(n);
  if (a_.empty()) throw InvalidArgument("series needs at least one coefficient");
  for (const PlanarNC& a : a_) {
    if (a.dim() != n) throw DimensionMismatch(n, a.dim());
  }
}

NCSeries NCSeries::exponential(int n, std::size_t terms) {
  std::vector<PlanarNC> a;
  double c = 1.0;
  for (std::size_t l = 0; l < terms; ++l) {
    if (l > 0) c /= static_cast<double>(l);
    a.push_back(PlanarNC::scalar(n, c));
  }
  return NCSeries(n, std::move(a));
}

double radius_global(const NCSeries& s) {
  std::vector<double> m;
  for (const PlanarNC& a : s.coeffs()) m.push_back(modulus(a));
  const auto r = tail_ratio_limit(m);
  if (!r) throw UndefinedRadius("radius undefined: trailing coefficients vanish");
  return *r / std::sqrt(s.dim() / 2.0);
}

std::vector<double> radius_per_plane(const NCSeries& s) {
  const auto images = plane_images(s);
  const int half = s.dim() / 2;
  std::vector<double> radii;
  for (int k = 0; k < half; ++k) {
    std::vector<double> m;
    for (const CanonicalCoords& c : images) {
      const Plane& pl = c.planes[static_cast<std::size_t>(k)];
      m.push_back(std::hypot(pl.v, pl.vt));
    }
    radii.push_back(tail_ratio_limit(m).value_or(kInf));
  }
  return radii;
}

SeriesEvaluation eval_series(const NCSeries& s, const PlanarNC& u) {
  if (u.dim() != s.dim()) throw DimensionMismatch(s.dim(), u.dim());
  const auto images = plane_images(s);
  const CanonicalCoords z = to_canonical(u);
  const auto radii = radius_per_plane(s);

  SeriesEvaluation out{PlanarNC(s.dim()), {}};
  CanonicalCoords sum{s.dim(), std::vector<Plane>(z.planes.size())};
  for (std::size_t k = 0; k < z.planes.size(); ++k) {
    const cd zk(z.planes[k].v, z.planes[k].vt);
    cd acc = 0.0;
    for (std::size_t l = images.size(); l-- > 0;) {
      acc = acc * zk + cd(images[l].planes[k].v, images[l].planes[k].vt);
    }
    sum.planes[k] = {acc.real(), acc.imag()};
    if (std::abs(zk) >= radii[k]) out.divergent_planes.push_back(static_cast<int>(k) + 1);
  }
  out.value = from_canonical(sum);
  return out;
}

NCSeries derivative_series(const NCSeries& s) {
  const auto& a = s.coeffs();
  if (a.size() == 1) return NCSeries(s.dim(), {PlanarNC(s.dim())});
  std::vector<PlanarNC> b;
  for (std::size_t l = 1; l < a.size(); ++l) b.push_back(static_cast<double>(l) * a[l]);
  return NCSeries(s.dim(), std::move(b));
}

NCSeries taylor_shift(const NCSeries& s, const PlanarNC& u0) {
  if (u0.dim() != s.dim()) throw DimensionMismatch(s.dim(), u0.dim());
  const auto& a = s.coeffs();
  const std::size_t size = a.size();
  std::vector<PlanarNC> powers{PlanarNC::one(s.dim())};
  for (std::size_t l = 1; l < size; ++l) powers.push_back(mul(powers.back(), u0));

  std::vector<PlanarNC> c;
  for (std::size_t k = 0; k < size; ++k) {
    PlanarNC acc(s.dim());
    double binom = 1.0;  // C(k+l, k), starting at l = 0
    for (std::size_t l = 0; k + l < size; ++l) {
      if (l > 0) binom *= static_cast<double>(k + l) / static_cast<double>(l);
      acc = acc + binom * mul(a[k + l], powers[l]);
    }
    c.push_back(std::move(acc));
  }
  return NCSeries(s.dim(), std::move(c));
}

CrReport cr_check(const Evaluator& f, const PlanarNC& u0, double h, double h2) {
  const int n = u0.dim();
  const auto un = static_cast<std::size_t>(n);
  auto shifted = [&](std::initializer_list<std::pair<int, double>> moves) {
    std::vector<double> x(u0.coeffs().begin(), u0.coeffs().end());
    for (auto [idx, dx] : moves) x[static_cast<std::size_t>(idx)] += dx;
    return f(PlanarNC(n, std::move(x)));
  };

  CrReport r;
  r.n = n;
  r.step = h;
  r.second_step = h2;
  r.jacobian.assign(un * un, 0.0);
  for (int l = 0; l < n; ++l) {
    const PlanarNC fp = shifted({{l, h}});
    const PlanarNC fm = shifted({{l, -h}});
    for (int k = 0; k < n; ++k) {
      r.jacobian[static_cast<std::size_t>(k * n + l)] = (fp[k] - fm[k]) / (2.0 * h);
    }
  }
  auto jac = [&](int k, int l) { return r.jacobian[static_cast<std::size_t>(k * n + l)]; };

  for (int k = 0; k < n; ++k) {
    const double ref = jac(k, 0);
    for (int j = 1; j < n; ++j) {
      const double sign = k + j >= n ? -1.0 : 1.0;
      r.first_order_residual =
          std::max(r.first_order_residual, std::abs(sign * jac((k + j) % n, j) - ref));
    }
  }

  // hess[(a*n + b)*n + k] = d^2 P_k / dx_a dx_b
  std::vector<double> hess(un * un * un, 0.0);
  const PlanarNC f0 = f(u0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      std::vector<double> d(un);
      if (a == b) {
        const PlanarNC fp = shifted({{a, h2}});
        const PlanarNC fm = shifted({{a, -h2}});
        for (int k = 0; k < n; ++k) {
          d[static_cast<std::size_t>(k)] = (fp[k] - 2.0 * f0[k] + fm[k]) / (h2 * h2);
        }
      } else {
        const PlanarNC pp = shifted({{a, h2}, {b, h2}});
        const PlanarNC pm = shifted({{a, h2}, {b, -h2}});
        const PlanarNC mp = shifted({{a, -h2}, {b, h2}});
        const PlanarNC mm = shifted({{a, -h2}, {b, -h2}});
        for (int k = 0; k < n; ++k) {
          d[static_cast<std::size_t>(k)] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h2 * h2);
        }
      }
      for (int k = 0; k < n; ++k) {
        hess[(static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)) * un +
             static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)];
      }
    }
  }
  // For fixed k, +-d^2 P_k / dx_a dx_b depends only on (a + b) mod n, with a
  // sign flip once a + b reaches n.
  for (int k = 0; k < n; ++k) {
    std::vector<std::optional<double>> first(un);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        const double sign = a + b >= n ? -1.0 : 1.0;
        const double v = sign * hess[(static_cast<std::size_t>(a) * un +
                                      static_cast<std::size_t>(b)) * un +
                                     static_cast<std::size_t>(k)];
        auto& slot = first[static_cast<std::size_t>((a + b) % n)];
        if (!slot) {
          slot = v;
        } else {
          r.second_order_residual = std::max(r.second_order_residual, std::abs(v - *slot));
        }
      }
    }
  }
  return r;
}

}  // namespace pnc
