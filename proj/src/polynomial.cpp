#include "pnc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <string>

#include "pnc/canonical.hpp"
#include "pnc/error.hpp"

namespace pnc {

namespace {

using cd = std::complex<double>;

constexpr double kAngleOffset = 0.6180339887498949;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxEnumerationSteps = 10'000'000;

double angle_of(cd z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  // Roots on the positive real axis may carry a rounding-level negative
  // imaginary part; they belong at angle 0.
  if (a >= kTwoPi - 1e-12) a = 0.0;
  return a;
}

// Sum |c_l| |z|^(m-l) with c_0 = 1: the scale of the rounding in p(z).
double eval_scale(const ComplexPoly& c, cd z) {
  const double r = std::abs(z);
  double s = 1.0;
  for (const cd& cl : c) s = s * r + std::abs(cl);
  return s;
}

struct PlaneRoots {
  std::vector<cd> roots;  // grouped by cluster, clusters in order of first appearance
  std::vector<int> ids;   // non-decreasing cluster id per root
  std::vector<int> multiplicity;
};

PlaneRoots cluster_sorted(std::vector<cd> roots) {
  std::sort(roots.begin(), roots.end(), [](cd a, cd b) {
    const double aa = angle_of(a);
    const double ab = angle_of(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  std::vector<cd> reps;
  std::vector<int> raw(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double tol = kRootClusterTolerance * std::max(1.0, std::abs(roots[i]));
    auto it = std::find_if(reps.begin(), reps.end(), [&](cd r) { return std::abs(r - roots[i]) <= tol; });
    if (it == reps.end()) {
      raw[i] = static_cast<int>(reps.size());
      reps.push_back(roots[i]);
    } else {
      raw[i] = static_cast<int>(it - reps.begin());
    }
  }
  PlaneRoots out;
  out.multiplicity.assign(reps.size(), 0);
  for (int id = 0; id < static_cast<int>(reps.size()); ++id) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (raw[i] != id) continue;
      out.roots.push_back(roots[i]);
      out.ids.push_back(id);
      ++out.multiplicity[static_cast<std::size_t>(id)];
    }
  }
  return out;
}

double multinomial(const std::vector<int>& mult) {
  double result = 1.0;
  int total = 0;
  for (int k : mult) {
    for (int j = 1; j <= k; ++j) {
      ++total;
      result = result * total / j;
    }
  }
  return std::round(result);
}

RootAssembly build_assembly(int n, const std::vector<PlaneRoots>& planes,
                            const std::vector<std::vector<int>>& order) {
  const std::size_t m = planes.front().roots.size();
  RootAssembly a;
  for (std::size_t k = 0; k < planes.size(); ++k) {
    // Pick roots cluster by cluster in the order they appear in the plane.
    std::vector<std::size_t> next(planes[k].multiplicity.size(), 0);
    std::vector<std::size_t> first(planes[k].multiplicity.size(), 0);
    for (std::size_t i = planes[k].ids.size(); i-- > 0;) {
      first[static_cast<std::size_t>(planes[k].ids[i])] = i;
    }
    std::vector<cd> row;
    for (std::size_t p = 0; p < m; ++p) {
      const auto id = static_cast<std::size_t>(order[k][p]);
      row.push_back(planes[k].roots[first[id] + next[id]++]);
    }
    a.per_plane_roots.push_back(std::move(row));
  }
  for (std::size_t p = 0; p < m; ++p) {
    CanonicalCoords c{n, {}};
    for (const auto& row : a.per_plane_roots) c.planes.push_back({row[p].real(), row[p].imag()});
    a.assembled_roots.push_back(from_canonical(c));
  }
  return a;
}

std::vector<int> multiset_key(const std::vector<std::vector<int>>& order) {
  const std::size_t m = order.front().size();
  std::vector<std::vector<int>> tuples(m);
  for (std::size_t p = 0; p < m; ++p) {
    for (const auto& plane : order) tuples[p].push_back(plane[p]);
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<int> key;
  for (const auto& t : tuples) key.insert(key.end(), t.begin(), t.end());
  return key;
}

}  // namespace

NPolynomial::NPolynomial(int n, std::vector<PlanarNC> coeffs) : n_(n), a_(std::move(coeffs)) {
  require_even_dimension(n);
  if (a_.empty()) throw InvalidArgument("polynomial degree must be at least 1");
  for (const PlanarNC& a : a_) {
    if (a.dim() != n) throw DimensionMismatch(n, a.dim());
  }
}

NPolynomial NPolynomial::normalized(int n, const std::vector<PlanarNC>& with_leading) {
  if (with_leading.size() < 2) throw InvalidArgument("polynomial degree must be at least 1");
  if (with_leading.front().dim() != n) throw DimensionMismatch(n, with_leading.front().dim());
  PlanarNC inv(n);
  try {
    inv = inverse(with_leading.front());
  } catch (const NodalSingularity&) {
    throw InvalidArgument("leading coefficient is not invertible");
  }
  std::vector<PlanarNC> a;
  for (std::size_t l = 1; l < with_leading.size(); ++l) a.push_back(mul(with_leading[l], inv));
  return NPolynomial(n, std::move(a));
}

NPolynomial NPolynomial::from_roots(int n, const std::vector<PlanarNC>& roots) {
  if (roots.empty()) throw InvalidArgument("polynomial degree must be at least 1");
  // c holds the full coefficient list, leading 1 first.
  std::vector<PlanarNC> c{PlanarNC::one(n)};
  for (const PlanarNC& r : roots) {
    if (r.dim() != n) throw DimensionMismatch(n, r.dim());
    c.push_back(PlanarNC(n));
    for (std::size_t l = c.size() - 1; l > 0; --l) c[l] = c[l] - mul(c[l - 1], r);
  }
  c.erase(c.begin());
  return NPolynomial(n, std::move(c));
}

PlanarNC eval_poly(const NPolynomial& p, const PlanarNC& u) {
  if (u.dim() != p.dim()) throw DimensionMismatch(p.dim(), u.dim());
  PlanarNC r = PlanarNC::one(p.dim());
  for (const PlanarNC& a : p.coeffs()) r = mul(r, u) + a;
  return r;
}

cd eval_poly(const ComplexPoly& c, cd z) {
  cd r = 1.0;
  for (const cd& cl : c) r = r * z + cl;
  return r;
}

std::vector<ComplexPoly> project_to_planes(const NPolynomial& p) {
  std::vector<ComplexPoly> out(static_cast<std::size_t>(p.dim() / 2));
  for (const PlanarNC& a : p.coeffs()) {
    const CanonicalCoords c = to_canonical(a);
    for (std::size_t k = 0; k < out.size(); ++k) out[k].emplace_back(c.planes[k].v, c.planes[k].vt);
  }
  return out;
}

std::vector<cd> roots_per_plane(const ComplexPoly& c, double tol, int max_iter) {
  const std::size_t m = c.size();
  if (m == 0) throw InvalidArgument("polynomial degree must be at least 1");
  for (const cd& cl : c) {
    if (!std::isfinite(cl.real()) || !std::isfinite(cl.imag())) {
      throw InvalidArgument("polynomial coefficients must be finite");
    }
  }
  if (m == 1) return {-c[0]};

  double radius = 1.0;
  for (const cd& cl : c) radius = std::max(radius, 1.0 + std::abs(cl));
  std::vector<cd> z(m);
  for (std::size_t j = 0; j < m; ++j) {
    z[j] = std::polar(radius, kTwoPi * static_cast<double>(j) / static_cast<double>(m) + kAngleOffset);
  }

  for (int it = 0; it < max_iter; ++it) {
    double worst = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      cd p = 1.0;
      cd dp = 0.0;
      for (const cd& cl : c) {
        dp = dp * z[j] + p;
        p = p * z[j] + cl;
      }
      if (p == 0.0) continue;
      cd s = 0.0;
      cd prod = 1.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        s += 1.0 / (z[j] - z[i]);
        prod *= z[j] - z[i];
      }
      const cd w = p / dp;
      cd corr = w / (1.0 - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = p / prod;
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[j] -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[j])));
    }
    if (worst < tol) return z;
  }
  // Multiple roots converge only linearly; accept once p(z) is rounding noise.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (const cd& zj : z) {
    if (std::abs(eval_poly(c, zj)) > 64.0 * eps * static_cast<double>(m) * eval_scale(c, zj)) {
      throw NonConvergence("root iteration did not converge");
    }
  }
  return z;
}

std::vector<RootAssembly> factor(const NPolynomial& p, std::size_t enumerate_limit,
                                 bool enumerate_all) {
  const int n = p.dim();
  const auto m = static_cast<std::size_t>(p.degree());
  std::vector<PlaneRoots> planes;
  for (const ComplexPoly& c : project_to_planes(p)) planes.push_back(cluster_sorted(roots_per_plane(c)));
  const std::size_t half = planes.size();

  std::optional<std::size_t> anchor;
  for (std::size_t k = 0; k < half && !anchor; ++k) {
    if (planes[k].multiplicity.size() == m) anchor = k;
  }
  std::size_t count = 0;
  if (anchor) {
    double total = 1.0;
    for (std::size_t k = 0; k < half; ++k) {
      if (k != *anchor) total *= multinomial(planes[k].multiplicity);
    }
    if (total > static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
      throw AssemblyOverflow("assembly count exceeds the representable range");
    }
    count = static_cast<std::size_t>(total);
    if (enumerate_all && count > enumerate_limit) {
      throw AssemblyOverflow("assembly count " + std::to_string(count) + " exceeds the limit");
    }
  }

  std::vector<std::vector<int>> order;
  for (const PlaneRoots& pr : planes) order.push_back(pr.ids);
  std::vector<RootAssembly> out;
  std::set<std::vector<int>> seen;
  std::size_t steps = 0;
  const std::size_t wanted = std::max<std::size_t>(1, enumerate_limit);
  for (;;) {
    if (++steps > kMaxEnumerationSteps) {
      throw AssemblyOverflow("too many root pairings to enumerate");
    }
    if (seen.insert(multiset_key(order)).second && out.size() < wanted) {
      out.push_back(build_assembly(n, planes, order));
    }
    if (anchor && out.size() >= std::min(wanted, count)) break;
    if (!anchor && enumerate_all && seen.size() > enumerate_limit) {
      throw AssemblyOverflow("assembly count exceeds the limit");
    }
    // Mixed-radix step: plane 2 is the fastest digit, plane 1 never moves.
    std::size_t k = 1;
    while (k < half && !std::next_permutation(order[k].begin(), order[k].end())) ++k;
    if (k >= half) break;
  }
  if (!anchor) count = seen.size();
  for (RootAssembly& a : out) a.assembly_count = count;
  return out;
}

double reexpansion_error(const NPolynomial& p, const RootAssembly& a) {
  const NPolynomial q = NPolynomial::from_roots(p.dim(), a.assembled_roots);
  if (q.degree() != p.degree()) throw InvalidArgument("assembly has the wrong number of roots");
  double e = 0.0;
  for (std::size_t l = 0; l < p.coeffs().size(); ++l) {
    e = std::max(e, max_abs_diff(p.coeffs()[l], q.coeffs()[l]));
  }
  return e;
}

}  // namespace pnc
