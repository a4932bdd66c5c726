#include "pnc/canonical.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <unordered_map>

#include "pnc/error.hpp"

namespace pnc {

namespace {

template <typename T>
class PerDimensionCache {
 public:
  template <typename Build>
  const T& get(int n, Build build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(n); it != entries_.end()) return *it->second;
    }
    auto fresh = std::make_unique<const T>(build(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(n, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<int, std::unique_ptr<const T>> entries_;
};

TrigTable build_table(int n) {
  TrigTable t;
  t.n = n;
  const int half = n / 2;
  t.cos.resize(static_cast<std::size_t>(half * n));
  t.sin.resize(static_cast<std::size_t>(half * n));
  for (int k = 1; k <= half; ++k) {
    for (int p = 0; p < n; ++p) {
      // Reduce the angle index mod 2n before scaling by pi/n.
      const int a = ((2 * k - 1) * p) % (2 * n);
      const double angle = std::numbers::pi * a / n;
      t.cos[static_cast<std::size_t>((k - 1) * n + p)] = std::cos(angle);
      t.sin[static_cast<std::size_t>((k - 1) * n + p)] = std::sin(angle);
    }
  }
  return t;
}

CanonicalBasis build_basis(int n) {
  const TrigTable& t = trig_table(n);
  CanonicalBasis b;
  b.n = n;
  const double w = 2.0 / n;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<double> e(static_cast<std::size_t>(n));
    std::vector<double> et(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      e[static_cast<std::size_t>(p)] = w * t.c(k, p);
      et[static_cast<std::size_t>(p)] = w * t.s(k, p);
    }
    b.e.emplace_back(n, std::move(e));
    b.et.emplace_back(n, std::move(et));
  }
  return b;
}

double wrap_angle(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi -= two_pi;
  return phi;
}

void require_regular(const PlanarNC& u, double tol) {
  if (auto bad = nodal_planes(u, tol); !bad.empty()) throw NodalSingularity(std::move(bad));
}

PlanarNC phase_exponent(const PlanarNC& u, const CanonicalCoords& c) {
  const CanonicalBasis& b = canonical_basis(u.dim());
  PlanarNC phase(u.dim());
  for (int k = 1; k <= u.dim() / 2; ++k) {
    const Plane& pl = c.planes[static_cast<std::size_t>(k - 1)];
    phase = phase + b.et[static_cast<std::size_t>(k - 1)] * wrap_angle(std::atan2(pl.vt, pl.v));
  }
  return phase;
}

}  // namespace

const TrigTable& trig_table(int n) {
  static PerDimensionCache<TrigTable> cache;
  require_even_dimension(n);
  return cache.get(n, build_table);
}

const CanonicalBasis& canonical_basis(int n) {
  static PerDimensionCache<CanonicalBasis> cache;
  require_even_dimension(n);
  return cache.get(n, build_basis);
}

CanonicalCoords to_canonical(const PlanarNC& u) {
  const int n = u.dim();
  const TrigTable& t = trig_table(n);
  const auto x = u.coeffs();
  CanonicalCoords c{n, std::vector<Plane>(static_cast<std::size_t>(n / 2))};
  for (int k = 1; k <= n / 2; ++k) {
    double v = 0.0;
    double vt = 0.0;
    for (int p = 0; p < n; ++p) {
      v += x[static_cast<std::size_t>(p)] * t.c(k, p);
      vt += x[static_cast<std::size_t>(p)] * t.s(k, p);
    }
    c.planes[static_cast<std::size_t>(k - 1)] = {v, vt};
  }
  return c;
}

PlanarNC from_canonical(const CanonicalCoords& c) {
  const int n = c.n;
  const TrigTable& t = trig_table(n);
  if (c.planes.size() != static_cast<std::size_t>(n / 2)) {
    throw InvalidArgument("canonical coordinates need n/2 planes");
  }
  const double w = 2.0 / n;
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int p = 0; p < n; ++p) {
    double acc = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const Plane& pl = c.planes[static_cast<std::size_t>(k - 1)];
      acc += pl.v * t.c(k, p) + pl.vt * t.s(k, p);
    }
    x[static_cast<std::size_t>(p)] = w * acc;
  }
  for (double xi : x) {
    if (!std::isfinite(xi)) throw Overflow("from_canonical: result is not finite");
  }
  return PlanarNC(n, std::move(x));
}

CanonicalCoords mul_canonical(const CanonicalCoords& a, const CanonicalCoords& b) {
  if (a.n != b.n) throw DimensionMismatch(a.n, b.n);
  CanonicalCoords r{a.n, std::vector<Plane>(a.planes.size())};
  for (std::size_t k = 0; k < a.planes.size(); ++k) {
    const Plane& p = a.planes[k];
    const Plane& q = b.planes[k];
    r.planes[k] = {p.v * q.v - p.vt * q.vt, p.v * q.vt + p.vt * q.v};
  }
  return r;
}

PlanarNC mul_via_canonical(const PlanarNC& u, const PlanarNC& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  return from_canonical(mul_canonical(to_canonical(u), to_canonical(v)));
}

std::vector<double> plane_radii(const PlanarNC& u) {
  const CanonicalCoords c = to_canonical(u);
  std::vector<double> r;
  r.reserve(c.planes.size());
  for (const Plane& pl : c.planes) r.push_back(std::hypot(pl.v, pl.vt));
  return r;
}

std::vector<int> nodal_planes(const PlanarNC& u, double tol) {
  const double threshold = tol * std::max(1.0, modulus(u));
  const auto r = plane_radii(u);
  std::vector<int> bad;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] <= threshold) bad.push_back(static_cast<int>(k) + 1);
  }
  return bad;
}

double PolarForm::phi(int k) const {
  const auto& a = phi_k.at(static_cast<std::size_t>(k - 1));
  if (!a) throw NodalSingularity({k});
  return *a;
}

PolarForm polar_form(const PlanarNC& u, double tol) {
  const int n = u.dim();
  const CanonicalCoords c = to_canonical(u);
  PolarForm f;
  f.d = modulus(u);
  f.rho = 1.0;
  const double threshold = tol * std::max(1.0, f.d);
  for (int k = 1; k <= n / 2; ++k) {
    const Plane& pl = c.planes[static_cast<std::size_t>(k - 1)];
    const double r = std::hypot(pl.v, pl.vt);
    f.rho_k.push_back(r);
    f.rho *= std::pow(r, 2.0 / n);
    if (r <= threshold) {
      f.phi_k.emplace_back(std::nullopt);
      f.nodal.push_back(k);
    } else {
      f.phi_k.emplace_back(wrap_angle(std::atan2(pl.vt, pl.v)));
    }
  }
  for (int k = 2; k <= n / 2; ++k) {
    f.psi.push_back(std::atan2(f.rho_k[0], f.rho_k[static_cast<std::size_t>(k - 1)]));
  }
  return f;
}

ExponentialForm exponential_form(const PlanarNC& u, double tol) {
  require_regular(u, tol);
  const int n = u.dim();
  const TrigTable& t = trig_table(n);
  const CanonicalCoords c = to_canonical(u);

  std::vector<double> log_rho(static_cast<std::size_t>(n / 2));
  for (std::size_t k = 0; k < log_rho.size(); ++k) {
    log_rho[k] = std::log(std::hypot(c.planes[k].v, c.planes[k].vt));
  }
  double mean_log = 0.0;
  for (double l : log_rho) mean_log += l;
  mean_log *= 2.0 / n;

  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  for (int p = 1; p < n; ++p) {
    double acc = 0.0;
    for (int k = 2; k <= n / 2; ++k) {
      // ln tan psi_{k-1} = ln rho_1 - ln rho_k
      const double ln_tan = log_rho[0] - log_rho[static_cast<std::size_t>(k - 1)];
      acc += t.c(k, p) * ln_tan;
    }
    h[static_cast<std::size_t>(p)] = -(2.0 / n) * acc;
  }
  return {std::exp(mean_log), PlanarNC(n, std::move(h)), phase_exponent(u, c)};
}

TrigonometricForm trigonometric_form(const PlanarNC& u, double tol) {
  require_regular(u, tol);
  const int n = u.dim();
  const CanonicalCoords c = to_canonical(u);
  const CanonicalBasis& b = canonical_basis(n);

  const double rho1 = std::hypot(c.planes[0].v, c.planes[0].vt);
  double sum_inv_tan2 = 0.0;
  PlanarNC direction = b.e[0];
  for (int k = 2; k <= n / 2; ++k) {
    const Plane& pl = c.planes[static_cast<std::size_t>(k - 1)];
    const double inv_tan = std::hypot(pl.v, pl.vt) / rho1;
    sum_inv_tan2 += inv_tan * inv_tan;
    direction = direction + b.e[static_cast<std::size_t>(k - 1)] * inv_tan;
  }
  const double scale = std::sqrt(n / 2.0) / std::sqrt(1.0 + sum_inv_tan2);
  return {modulus(u), scale, direction, phase_exponent(u, c)};
}

double modulus_from_amplitude(int n, double rho, const std::vector<double>& psi) {
  require_even_dimension(n);
  if (psi.size() != static_cast<std::size_t>(n / 2 - 1)) {
    throw InvalidArgument("expected n/2 - 1 planar angles");
  }
  double log_prod_tan = 0.0;
  double sum_inv_tan2 = 0.0;
  for (double a : psi) {
    const double tn = std::tan(a);
    log_prod_tan += std::log(tn);
    sum_inv_tan2 += 1.0 / (tn * tn);
  }
  return std::sqrt(2.0 / n) * rho * std::exp(2.0 / n * log_prod_tan) *
         std::sqrt(1.0 + sum_inv_tan2);
}

}  // namespace pnc
