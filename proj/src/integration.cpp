#include "pnc/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

#include "pnc/error.hpp"
#include "pnc/kernels.hpp"

namespace pnc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClosureTolerance = 1e-12;

void check_path(int n, const std::vector<PlanarNC>& points, bool closed) {
  require_even_dimension(n);
  if (points.size() < 3) throw InvalidArgument("a path needs at least three samples");
  for (const PlanarNC& p : points) {
    if (p.dim() != n) throw DimensionMismatch(n, p.dim());
  }
  if (closed) {
    const PlanarNC& a = points.front();
    if (max_abs_diff(a, points.back()) > kClosureTolerance * std::max(1.0, modulus(a))) {
      throw InvalidArgument("closed path must end where it starts");
    }
  }
}

void check_regular_samples(const std::vector<PlanarNC>& samples, const QuadratureOptions& opts) {
  for (const PlanarNC& pole : opts.poles) {
    for (const PlanarNC& u : samples) {
      if (!nodal_planes(u - pole, opts.singular_tol).empty()) {
        throw SingularPath("path sample lies on a singular hypersurface");
      }
    }
  }
}

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

PlanarNC phase_units(int n, const std::vector<int>& winding) {
  const CanonicalBasis& basis = canonical_basis(n);
  if (winding.size() != basis.et.size()) throw InvalidArgument("one winding per plane expected");
  PlanarNC s(n);
  for (std::size_t k = 0; k < winding.size(); ++k) {
    if (winding[k] != 0) s = s + static_cast<double>(winding[k]) * basis.et[k];
  }
  return s;
}

}  // namespace

SampledPath::SampledPath(int n, std::vector<PlanarNC> points, bool closed)
    : n_(n), points_(std::move(points)), closed_(closed) {
  check_path(n_, points_, closed_);
}

SampledPath SampledPath::from_curve(int n, Curve curve, double t0, double t1,
                                    std::size_t segments, bool closed) {
  if (segments < 2) throw InvalidArgument("a path needs at least two segments");
  if (!curve) throw InvalidArgument("curve is empty");
  std::vector<PlanarNC> pts;
  pts.reserve(segments + 1);
  for (std::size_t j = 0; j <= segments; ++j) {
    pts.push_back(curve(t0 + (t1 - t0) * static_cast<double>(j) / static_cast<double>(segments)));
  }
  SampledPath path(n, std::move(pts), closed);
  path.curve_ = std::move(curve);
  path.t0_ = t0;
  path.t1_ = t1;
  return path;
}

PlanarNC SampledPath::at(double s) const {
  const double m = static_cast<double>(segments());
  if (curve_) return curve_(t0_ + (t1_ - t0_) * s / m);
  const double i = std::clamp(std::floor(s), 0.0, m - 1.0);
  const double frac = s - i;
  const auto idx = static_cast<std::size_t>(i);
  const PlanarNC& a = points_[idx];
  if (frac == 0.0) return a;
  return a + frac * (points_[idx + 1] - a);
}

SampledPath plane_circles(const CanonicalCoords& center, const std::vector<double>& radii,
                          std::size_t segments) {
  if (radii.size() != center.planes.size()) throw InvalidArgument("one radius per plane expected");
  Curve curve = [center, radii](double t) {
    CanonicalCoords c = center;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      c.planes[k].v += radii[k] * std::cos(t);
      c.planes[k].vt += radii[k] * std::sin(t);
    }
    return from_canonical(c);
  };
  return SampledPath::from_curve(center.n, std::move(curve), 0.0, kTwoPi, segments, true);
}

PlanarNC line_integral(const Evaluator& f, const SampledPath& path, const QuadratureOptions& opts) {
  const int n = path.dim();
  const std::size_t segments = path.segments();
  std::optional<PlanarNC> previous;
  for (std::size_t sub = 1;; sub *= 2) {
    const std::size_t pieces = segments * sub;
    if (pieces > opts.max_samples) {
      throw NonConvergence("line integral did not settle within the sample budget");
    }
    const double step = 1.0 / static_cast<double>(sub);
    std::vector<PlanarNC> nodes;
    std::vector<PlanarNC> mids;
    nodes.reserve(pieces + 1);
    mids.reserve(pieces);
    for (std::size_t j = 0; j <= pieces; ++j) {
      nodes.push_back(path.at(static_cast<double>(j) * step));
      if (j < pieces) mids.push_back(path.at((static_cast<double>(j) + 0.5) * step));
    }
    if (!opts.poles.empty()) {
      if (sub == 1) check_regular_samples(nodes, opts);
      check_regular_samples(mids, opts);
    }
    const std::vector<PlanarNC> values =
        opts.parallel ? kernels::parallel::evaluate(f, mids) : kernels::serial::evaluate(f, mids);

    PlanarNC sum(n);
    for (std::size_t j = 0; j < pieces; ++j) sum = sum + mul(values[j], nodes[j + 1] - nodes[j]);

    if (previous) {
      const PlanarNC delta = sum - *previous;
      if (modulus(delta) <= opts.rel_tol * std::max(1.0, modulus(sum))) {
        return sum + (1.0 / 3.0) * delta;
      }
    }
    previous = std::move(sum);
  }
}

int winding(Point2 point, const std::vector<Point2>& loop, double rel_tol) {
  if (loop.size() < 3) throw InvalidArgument("a loop needs at least three vertices");
  double xmin = loop.front().x;
  double xmax = xmin;
  double ymin = loop.front().y;
  double ymax = ymin;
  for (const Point2& q : loop) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  const double diameter = std::hypot(xmax - xmin, ymax - ymin);

  bool inside = false;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2 a = loop[i];
    const Point2 b = loop[(i + 1) % loop.size()];
    const double dist = distance_to_segment(point, a, b);
    if (dist == 0.0 || dist <= rel_tol * diameter) {
      throw OnBoundary("point lies on the projected loop");
    }
    if ((a.y > point.y) != (b.y > point.y)) {
      const double x = a.x + (point.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (point.x < x) inside = !inside;
    }
  }
  return inside ? 1 : 0;
}

Point2 plane_projection(const PlanarNC& u, int k) {
  const CanonicalCoords c = to_canonical(u);
  if (k < 1 || k > static_cast<int>(c.planes.size())) throw InvalidArgument("plane out of range");
  const Plane& pl = c.planes[static_cast<std::size_t>(k - 1)];
  return {pl.v, pl.vt};
}

std::vector<int> plane_windings(const PlanarNC& u0, const SampledPath& loop) {
  if (!loop.closed()) throw InvalidArgument("winding needs a closed path");
  if (u0.dim() != loop.dim()) throw DimensionMismatch(loop.dim(), u0.dim());
  const std::size_t half = static_cast<std::size_t>(loop.dim() / 2);
  std::vector<std::vector<Point2>> projected(half);
  for (const PlanarNC& u : loop.points()) {
    const CanonicalCoords c = to_canonical(u);
    for (std::size_t k = 0; k < half; ++k) projected[k].push_back({c.planes[k].v, c.planes[k].vt});
  }
  const CanonicalCoords c0 = to_canonical(u0);
  std::vector<int> out;
  for (std::size_t k = 0; k < half; ++k) {
    out.push_back(winding({c0.planes[k].v, c0.planes[k].vt}, projected[k]));
  }
  return out;
}

ResidueResult residue_integral(const PlanarNC& u0, const SampledPath& loop) {
  ResidueResult r{PlanarNC(loop.dim()), plane_windings(u0, loop)};
  r.value = kTwoPi * phase_units(loop.dim(), r.winding);
  return r;
}

CauchyResult cauchy_value(const Evaluator& f, const PlanarNC& u0, const SampledPath& loop,
                          const QuadratureOptions& opts) {
  CauchyResult r{PlanarNC(loop.dim()), PlanarNC(loop.dim()), plane_windings(u0, loop), 0.0};
  QuadratureOptions o = opts;
  o.poles.push_back(u0);
  r.quadrature = line_integral([&](const PlanarNC& u) { return mul(f(u), inverse(u - u0)); },
                               loop, o);
  r.formula = kTwoPi * mul(f(u0), phase_units(loop.dim(), r.winding));
  for (double x : r.quadrature.coeffs()) r.component_sum += x;
  return r;
}

PlanarNC cauchy_components(const PlanarNC& f_u0, const std::vector<int>& winding) {
  const int n = f_u0.dim();
  if (winding.size() != static_cast<std::size_t>(n / 2)) {
    throw InvalidArgument("one winding per plane expected");
  }
  const TrigTable& t = trig_table(n);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int l = 0; l < n; ++l) {
    double acc = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const int w = winding[static_cast<std::size_t>(k - 1)];
      if (w == 0) continue;
      double inner = 0.0;
      for (int p = 1; p < n; ++p) {
        const double s = p > l ? -1.0 : 1.0;
        inner += s * t.s(k, p) * f_u0[((l - p) % n + n) % n];
      }
      acc += w * inner;
    }
    out[static_cast<std::size_t>(l)] = kTwoPi * (2.0 / n) * acc;
  }
  return PlanarNC(n, std::move(out));
}

PlanarNC higher_order_formula(const PlanarNC& derivative_at_u0, int m,
                              const std::vector<int>& winding) {
  if (m < 0) throw InvalidArgument("derivative order must be non-negative");
  double factorial = 1.0;
  for (int j = 2; j <= m; ++j) factorial *= j;
  return (kTwoPi / factorial) *
         mul(derivative_at_u0, phase_units(derivative_at_u0.dim(), winding));
}

PlanarNC residue_sum(const std::vector<Pole>& poles, const SampledPath& loop) {
  PlanarNC sum(loop.dim());
  for (const Pole& p : poles) {
    if (p.residue.dim() != loop.dim()) throw DimensionMismatch(loop.dim(), p.residue.dim());
    sum = sum + mul(residue_integral(p.location, loop).value, p.residue);
  }
  return sum;
}

}  // namespace pnc
