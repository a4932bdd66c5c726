#include "pnc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "pnc/canonical.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/error.hpp"
#include "pnc/functions.hpp"
#include "pnc/integration.hpp"
#include "pnc/matrixrep.hpp"
#include "pnc/polynomial.hpp"

namespace pnc::verify {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  PlanarNC value(int n, double scale = 1.0) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = uniform(-scale, scale);
    return PlanarNC(n, std::move(x));
  }

  /// A value whose planes all have radius at least 0.2.
  PlanarNC regular(int n) {
    for (;;) {
      PlanarNC u = value(n);
      const auto r = plane_radii(u);
      if (*std::min_element(r.begin(), r.end()) >= 0.2) return u;
    }
  }

 private:
  std::mt19937_64 rng_;
};

double rel(const PlanarNC& a, const PlanarNC& b) {
  return max_abs_diff(a, b) / std::max(1.0, std::max(modulus(a), modulus(b)));
}

class Suite {
 public:
  void record(std::string name, double measured, double threshold) {
    checks_.push_back({std::move(name), measured <= threshold, measured, threshold});
  }
  /// Runs body, turning a library exception into a failed check.
  void guarded(const std::string& name, double threshold, const std::function<double()>& body) {
    try {
      record(name, body(), threshold);
    } catch (const Error&) {
      checks_.push_back({name, false, std::numeric_limits<double>::infinity(), threshold});
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

constexpr int kTrials = 200;

}  // namespace

Evaluator function_by_name(const std::string& name, double m) {
  if (name == "exp") return [](const PlanarNC& u) { return pnc::exp(u); };
  if (name == "ln") return [](const PlanarNC& u) { return pnc::ln(u); };
  if (name == "cos") return [](const PlanarNC& u) { return pnc::cos(u); };
  if (name == "sin") return [](const PlanarNC& u) { return pnc::sin(u); };
  if (name == "cosh") return [](const PlanarNC& u) { return pnc::cosh(u); };
  if (name == "sinh") return [](const PlanarNC& u) { return pnc::sinh(u); };
  if (name == "square") return [](const PlanarNC& u) { return mul(u, u); };
  if (name == "cube") return [](const PlanarNC& u) { return mul(u, mul(u, u)); };
  if (name == "pow") return [m](const PlanarNC& u) { return pnc::pow(u, m); };
  throw InvalidArgument("unknown function: " + name);
}

std::vector<Check> run_all(int n, std::uint64_t seed) {
  require_even_dimension(n);
  Sampler rng(seed);
  Suite s;

  s.guarded("commutativity", 0.0, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      worst = std::max(worst, max_abs_diff(mul(u, v), mul(v, u)));
    }
    return worst;
  });
  s.guarded("associativity", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      const PlanarNC w = rng.value(n);
      worst = std::max(worst, rel(mul(mul(u, v), w), mul(u, mul(v, w))));
    }
    return worst;
  });
  s.guarded("distributivity", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      const PlanarNC w = rng.value(n);
      worst = std::max(worst, rel(mul(u, v + w), mul(u, v) + mul(u, w)));
    }
    return worst;
  });
  s.guarded("canonical_product", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      worst = std::max(worst, rel(mul(u, v), mul_via_canonical(u, v)));
    }
    return worst;
  });
  s.guarded("canonical_round_trip", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      worst = std::max(worst, rel(u, from_canonical(to_canonical(u))));
    }
    return worst;
  });
  s.guarded("inverse", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.regular(n);
      worst = std::max(worst, max_abs_diff(mul(u, inverse(u)), PlanarNC::one(n)));
    }
    return worst;
  });
  s.guarded("amplitude_multiplicative", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      const double a = amplitude(mul(u, v));
      const double b = amplitude(u) * amplitude(v);
      worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(b)));
    }
    return worst;
  });
  s.guarded("product_modulus_bound", 0.0, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      const double excess = modulus(mul(u, v)) - std::sqrt(n / 2.0) * modulus(u) * modulus(v);
      worst = std::max(worst, excess - 1e-12 * (1.0 + modulus(u) * modulus(v)));
    }
    return worst;
  });
  s.guarded("exp_addition", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      worst = std::max(worst, rel(pnc::exp(u + v), mul(pnc::exp(u), pnc::exp(v))));
    }
    return worst;
  });
  s.guarded("exp_ln", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.regular(n);
      worst = std::max(worst, rel(pnc::exp(pnc::ln(u)), u));
    }
    return worst;
  });
  s.guarded("pythagorean", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC c = pnc::cos(u);
      const PlanarNC sn = pnc::sin(u);
      worst = std::max(worst, rel(mul(c, c) + mul(sn, sn), PlanarNC::one(n)));
    }
    return worst;
  });
  if (n >= 4) {
    s.guarded("exponential_form_round_trip", 1e-10, [&] {
      double worst = 0.0;
      for (int t = 0; t < kTrials; ++t) {
        const PlanarNC u = rng.regular(n);
        worst = std::max(worst, max_abs_diff(reconstruct(exponential_form(u)), u));
      }
      return worst;
    });
    s.guarded("trigonometric_form_round_trip", 1e-10, [&] {
      double worst = 0.0;
      for (int t = 0; t < kTrials; ++t) {
        const PlanarNC u = rng.regular(n);
        worst = std::max(worst, max_abs_diff(reconstruct(trigonometric_form(u)), u));
      }
      return worst;
    });
  }
  s.guarded("cosexp_closed_vs_series", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials / 4; ++t) {
      const double y = rng.uniform(-5.0, 5.0);
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(cosexp::f_closed(n, k, y) - cosexp::f_series(n, k, y)));
      }
    }
    return worst;
  });
  s.guarded("exp_axis", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials / 4; ++t) {
      const double y = rng.uniform(-3.0, 3.0);
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, rel(cosexp::exp_hk(n, k, y), pnc::exp(y * PlanarNC::basis(n, k))));
      }
    }
    return worst;
  });
  s.guarded("riemann_relations_exp", kCrThreshold, [&] {
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const CrReport r = cr_check(function_by_name("exp"), rng.value(n));
      worst = std::max({worst, r.first_order_residual, r.second_order_residual});
    }
    return worst;
  });
  s.guarded("matrix_homomorphism", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const PlanarNC v = rng.value(n);
      const double d = max_abs_diff(matrix_rep(mul(u, v)), matrix_rep(u) * matrix_rep(v));
      worst = std::max(worst, d / (1.0 + modulus(u) * modulus(v)));
    }
    return worst;
  });
  s.guarded("block_diagonalization", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const PlanarNC u = rng.value(n);
      const RepMatrix b = block_diagonalize(u);
      const CanonicalCoords c = to_canonical(u);
      for (int k = 0; k < n / 2; ++k) {
        const Plane& pl = c.planes[static_cast<std::size_t>(k)];
        worst = std::max({worst, std::abs(b(2 * k, 2 * k) - pl.v),
                          std::abs(b(2 * k, 2 * k + 1) - pl.vt),
                          std::abs(b(2 * k + 1, 2 * k) + pl.vt),
                          std::abs(b(2 * k + 1, 2 * k + 1) - pl.v)});
      }
    }
    return worst;
  });
  s.guarded("square_root_of_minus_one_count", 0.0, [&] {
    const NPolynomial p(n, {PlanarNC(n), PlanarNC::one(n)});
    const auto assemblies = factor(p);
    const double expected = std::ldexp(1.0, n / 2 - 1);
    return std::abs(static_cast<double>(assemblies.front().assembly_count) - expected);
  });
  s.guarded("factor_plant_and_recover", 1e-8, [&] {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      std::vector<PlanarNC> roots;
      for (int p = 0; p < 3; ++p) roots.push_back(rng.value(n));
      const NPolynomial poly = NPolynomial::from_roots(n, roots);
      double scale = 1.0;
      for (const PlanarNC& a : poly.coeffs()) scale = std::max(scale, modulus(a));
      worst = std::max(worst, reexpansion_error(poly, factor(poly, 1).front()) / scale);
    }
    return worst;
  });
  s.guarded("residue_plane_one", 1e-6, [&] {
    const PlanarNC u0 = rng.value(n);
    std::vector<double> radii(static_cast<std::size_t>(n / 2), 0.0);
    radii[0] = 1.0;
    CanonicalCoords center = to_canonical(u0);
    // Shift the other planes so the loop's pinned projections miss u0's.
    for (std::size_t k = 1; k < center.planes.size(); ++k) center.planes[k].v += 2.0;
    const SampledPath loop = plane_circles(center, radii, 1024);
    const PlanarNC exact = residue_integral(u0, loop).value;
    QuadratureOptions opts;
    opts.poles.push_back(u0);
    const PlanarNC quad =
        line_integral([&](const PlanarNC& u) { return inverse(u - u0); }, loop, opts);
    return max_abs_diff(quad, exact);
  });
  return s.take();
}

CrReport run_cr(const std::string& fn, int n, std::uint64_t seed) {
  require_even_dimension(n);
  Sampler rng(seed);
  const Evaluator f = function_by_name(fn);
  // ln and non-integer powers need a point away from the nodal hypersurfaces.
  const PlanarNC u0 = fn == "ln" || fn == "pow" ? rng.regular(n) : rng.value(n);
  return cr_check(f, u0);
}

}  // namespace pnc::verify
