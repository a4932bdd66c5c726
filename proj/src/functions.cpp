#include "pnc/functions.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "pnc/cosexp.hpp"
#include "pnc/error.hpp"

namespace pnc {

namespace {

using cd = std::complex<double>;

template <typename F>
PlanarNC per_plane(const PlanarNC& u, F f, const char* name) {
  CanonicalCoords c = to_canonical(u);
  for (Plane& pl : c.planes) {
    const cd z = f(cd(pl.v, pl.vt));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Overflow(std::string(name) + ": result exceeds the double range");
    }
    pl = {z.real(), z.imag()};
  }
  return from_canonical(c);
}

double principal_arg(cd z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a -= 2.0 * std::numbers::pi;
  return a;
}

void require_regular(const PlanarNC& u, double tol) {
  if (auto bad = nodal_planes(u, tol); !bad.empty()) throw NodalSingularity(std::move(bad));
}

// Sum_p (-1)^[kp/n] h_{kp mod n} c_p.
PlanarNC along_powers_of_hk(int n, int k, const std::vector<double>& c) {
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int p = 0; p < n; ++p) {
    const int wraps = (k * p) / n;
    const int index = k * p - n * wraps;
    x[static_cast<std::size_t>(index)] += wraps % 2 == 0 ? c[static_cast<std::size_t>(p)]
                                                         : -c[static_cast<std::size_t>(p)];
  }
  return PlanarNC(n, std::move(x));
}

void require_axis(int n, int k) {
  require_even_dimension(n);
  if (k < 0 || k >= n) throw InvalidArgument("basis index out of range");
}

}  // namespace

PlanarNC exp(const PlanarNC& u) {
  return per_plane(u, [](cd z) { return std::exp(z); }, "exp");
}

PlanarNC ln(const PlanarNC& u, double tol) {
  require_regular(u, tol);
  return per_plane(u, [](cd z) { return cd(std::log(std::abs(z)), principal_arg(z)); }, "ln");
}

PlanarNC pow(const PlanarNC& u, double m, double tol) {
  if (m >= 0.0 && m == std::floor(m) && m < 4294967296.0) {
    auto e = static_cast<std::uint64_t>(m);
    PlanarNC result = PlanarNC::one(u.dim());
    PlanarNC base = u;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }
  require_regular(u, tol);
  return per_plane(
      u,
      [m](cd z) {
        const double r = std::pow(std::abs(z), m);
        const double a = m * principal_arg(z);
        return cd(r * std::cos(a), r * std::sin(a));
      },
      "pow");
}

PlanarNC cos(const PlanarNC& u) {
  return per_plane(u, [](cd z) { return std::cos(z); }, "cos");
}

PlanarNC sin(const PlanarNC& u) {
  return per_plane(u, [](cd z) { return std::sin(z); }, "sin");
}

PlanarNC cosh(const PlanarNC& u) {
  return per_plane(u, [](cd z) { return std::cosh(z); }, "cosh");
}

PlanarNC sinh(const PlanarNC& u) {
  return per_plane(u, [](cd z) { return std::sinh(z); }, "sinh");
}

TrigPair trig_of_axis(int n, int k, double y) {
  require_axis(n, k);
  std::vector<double> plus(static_cast<std::size_t>(n));
  std::vector<double> minus(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    if (k % 2 == 1) {
      double cp = 0.0;
      double sp = 0.0;
      for (int l = 1; l <= n; ++l) {
        const double a = std::numbers::pi * (2 * l - 1) / n;
        const double yc = y * std::cos(a);
        const double ys = y * std::sin(a);
        const double ap = std::numbers::pi * (((2 * l - 1) * p) % (2 * n)) / n;
        cp += std::cos(yc) * std::cosh(ys) * std::cos(ap) -
              std::sin(yc) * std::sinh(ys) * std::sin(ap);
        sp += std::sin(yc) * std::cosh(ys) * std::cos(ap) +
              std::cos(yc) * std::sinh(ys) * std::sin(ap);
      }
      plus[static_cast<std::size_t>(p)] = cp / n;
      minus[static_cast<std::size_t>(p)] = sp / n;
    } else {
      // g_np has real Taylor coefficients, so g(-iy) = conj g(iy).
      const auto g = cosexp::g_closed_complex(n, p, 0.0, y);
      plus[static_cast<std::size_t>(p)] = g.re;
      minus[static_cast<std::size_t>(p)] = g.im;
    }
  }
  return {along_powers_of_hk(n, k, plus), along_powers_of_hk(n, k, minus)};
}

HypPair hyp_of_axis(int n, int k, double y) {
  require_axis(n, k);
  std::vector<double> even(static_cast<std::size_t>(n));
  std::vector<double> odd(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    double fp = 0.0;
    double fm = 0.0;
    if (k % 2 == 1) {
      fp = cosexp::f_closed(n, p, y);
      fm = cosexp::f_closed(n, p, -y);
    } else {
      fp = cosexp::g_closed_complex(n, p, y, 0.0).re;
      fm = cosexp::g_closed_complex(n, p, -y, 0.0).re;
    }
    even[static_cast<std::size_t>(p)] = 0.5 * (fp + fm);
    odd[static_cast<std::size_t>(p)] = 0.5 * (fp - fm);
  }
  return {along_powers_of_hk(n, k, even), along_powers_of_hk(n, k, odd)};
}

PlanarNC reconstruct(const ExponentialForm& f) {
  return f.rho * mul(exp(f.h_part), exp(f.phase_part));
}

PlanarNC reconstruct(const TrigonometricForm& f) {
  return (f.d * f.scale) * mul(f.direction, exp(f.phase));
}

}  // namespace pnc
