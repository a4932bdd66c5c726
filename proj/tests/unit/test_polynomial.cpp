#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "pnc/canonical.hpp"
#include "pnc/error.hpp"
#include "pnc/polynomial.hpp"

using namespace pnc;

namespace {

using cd = std::complex<double>;

NPolynomial u2_plus_1(int n) { return NPolynomial(n, {PlanarNC(n), PlanarNC::one(n)}); }

// Sorted, rounded coefficient vectors of a root multiset.
std::multiset<std::vector<long long>> rounded(const std::vector<PlanarNC>& roots) {
  std::multiset<std::vector<long long>> out;
  for (const PlanarNC& r : roots) {
    std::vector<long long> key;
    for (double x : r.coeffs()) key.push_back(std::llround(x * 1e6));
    out.insert(key);
  }
  return out;
}

double max_root_error(std::vector<cd> got, std::vector<cd> want) {
  double worst = 0.0;
  for (cd w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](cd a, cd b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST(Polynomial, ProjectionExamples) {
  for (int n : {2, 4, 6}) {
    for (const ComplexPoly& c : project_to_planes(u2_plus_1(n))) {
      ASSERT_EQ(c.size(), 2U);
      EXPECT_LT(std::abs(c[0]), 1e-15);
      EXPECT_LT(std::abs(c[1] - cd(1.0)), 1e-15);
    }
  }
  oracle::Rng rng(60);
  const int n = 6;
  const PlanarNC u0 = rng.value(n);
  const auto planes = project_to_planes(NPolynomial(n, {-u0}));
  const CanonicalCoords c = to_canonical(u0);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    EXPECT_LT(std::abs(planes[k][0] + cd(c.planes[k].v, c.planes[k].vt)), 1e-15);
  }
}

TEST(Polynomial, EvaluationHomomorphism) {
  oracle::Rng rng(61);
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<PlanarNC> a;
      for (int l = 0; l < 4; ++l) a.push_back(rng.value(n));
      const NPolynomial p(n, a);
      const PlanarNC u = rng.value(n);
      const CanonicalCoords pu = to_canonical(eval_poly(p, u));
      const CanonicalCoords cu = to_canonical(u);
      const auto planes = project_to_planes(p);
      for (std::size_t k = 0; k < planes.size(); ++k) {
        const cd z = eval_poly(planes[k], cd(cu.planes[k].v, cu.planes[k].vt));
        EXPECT_LT(std::abs(z - cd(pu.planes[k].v, pu.planes[k].vt)), 1e-10);
      }
      EXPECT_LT(max_abs_diff(eval_poly(p, PlanarNC(n)), a.back()), 1e-15);
    }
  }
}

TEST(Polynomial, ComplexRootExamples) {
  const auto r1 = roots_per_plane({0.0, 1.0});
  EXPECT_LT(max_root_error(r1, {cd(0, 1), cd(0, -1)}), 1e-12);
  const auto r2 = roots_per_plane({-3.0, 2.0});
  EXPECT_LT(max_root_error(r2, {1.0, 2.0}), 1e-12);
  const auto r3 = roots_per_plane({cd(-2.0, 0.0), cd(1.0, 0.0)});
  EXPECT_LT(max_root_error(r3, {1.0, 1.0}), 1e-7);
  EXPECT_THROW(roots_per_plane({}), InvalidArgument);
}

TEST(Polynomial, PlantedComplexRoots) {
  oracle::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    std::vector<cd> planted;
    for (int j = 0; j < 5; ++j) planted.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const auto c = oracle::complex_from_roots(planted);
    const auto found = roots_per_plane(c);
    ASSERT_EQ(found.size(), 5U);
    EXPECT_LT(max_root_error(found, planted), 1e-8);
    EXPECT_LT(std::abs(std::abs(eval_poly(c, found[0]))), 1e-10);
  }
}

TEST(Polynomial, UnitSquareRootCounts) {
  for (int n : {4, 6, 8}) {
    const auto assemblies = factor(u2_plus_1(n), 1000, true);
    const std::size_t expected = std::size_t{1} << (n / 2 - 1);
    EXPECT_EQ(assemblies.front().assembly_count, expected);
    ASSERT_EQ(assemblies.size(), expected);
    std::set<std::multiset<std::vector<long long>>> distinct;
    for (const RootAssembly& a : assemblies) {
      distinct.insert(rounded(a.assembled_roots));
      EXPECT_LT(reexpansion_error(u2_plus_1(n), a), 1e-12);
      for (const PlanarNC& r : a.assembled_roots) {
        EXPECT_LT(max_abs_diff(mul(r, r), PlanarNC::scalar(n, -1.0)), 1e-10);
        EXPECT_LT(modulus(eval_poly(u2_plus_1(n), r)), 1e-12);
      }
    }
    EXPECT_EQ(distinct.size(), expected);
  }
}

TEST(Polynomial, UnitSquareRootsForFour) {
  const int n = 4;
  const CanonicalBasis& b = canonical_basis(n);
  const auto assemblies = factor(u2_plus_1(n));
  std::set<std::multiset<std::vector<long long>>> got;
  for (const RootAssembly& a : assemblies) got.insert(rounded(a.assembled_roots));
  const PlanarNC s = b.et[0] + b.et[1];
  const PlanarNC d = b.et[0] - b.et[1];
  const std::set<std::multiset<std::vector<long long>>> want = {rounded({s, -s}), rounded({d, -d})};
  EXPECT_EQ(got, want);
}

TEST(Polynomial, LinearFactor) {
  oracle::Rng rng(63);
  const int n = 6;
  const PlanarNC u0 = rng.value(n);
  const auto a = factor(NPolynomial(n, {-u0}));
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0].assembly_count, 1U);
  EXPECT_LT(max_abs_diff(a[0].assembled_roots[0], u0), 1e-14);
}

TEST(Polynomial, PlantAndRecover) {
  oracle::Rng rng(64);
  for (int n : {2, 4, 6, 8}) {
    for (int m = 1; m <= 5; ++m) {
      for (int t = 0; t < 10; ++t) {
        std::vector<PlanarNC> roots;
        for (int j = 0; j < m; ++j) roots.push_back(rng.value(n));
        const NPolynomial p = NPolynomial::from_roots(n, roots);
        double amax = 0.0;
        for (const PlanarNC& a : p.coeffs()) {
          for (double x : a.coeffs()) amax = std::max(amax, std::abs(x));
        }
        const auto assemblies = factor(p, 8);
        ASSERT_FALSE(assemblies.empty());
        for (const RootAssembly& a : assemblies) {
          EXPECT_LE(reexpansion_error(p, a), 1e-8 * (1.0 + amax)) << n << ' ' << m;
          for (const PlanarNC& r : a.assembled_roots) EXPECT_LT(modulus(eval_poly(p, r)), 1e-8);
        }
        // The planted multiset is one of the assemblies.
        const auto count = assemblies.front().assembly_count;
        if (count <= 8) {
          bool found = false;
          for (const RootAssembly& a : assemblies) {
            found = found || rounded(a.assembled_roots) == rounded(roots);
          }
          EXPECT_TRUE(found) << n << ' ' << m;
        }
        double expected = 1.0;
        for (int k = 1; k < n / 2; ++k) expected *= std::tgamma(m + 1.0);
        EXPECT_EQ(static_cast<double>(count), expected);
      }
    }
  }
}

TEST(Polynomial, CanonicalAssemblyIsSorted) {
  oracle::Rng rng(65);
  std::vector<PlanarNC> roots;
  for (int j = 0; j < 4; ++j) roots.push_back(rng.value(6));
  const auto a = factor(NPolynomial::from_roots(6, roots), 1).front();
  for (const auto& plane : a.per_plane_roots) {
    for (std::size_t p = 1; p < plane.size(); ++p) {
      auto angle = [](cd z) {
        double t = std::arg(z);
        return t < 0 ? t + 2.0 * std::numbers::pi : t;
      };
      EXPECT_LE(angle(plane[p - 1]), angle(plane[p]));
    }
  }
  EXPECT_EQ(a.assembly_count, 24U * 24U);
}

TEST(Polynomial, RepeatedRootsCollapse) {
  const int n = 4;
  const PlanarNC r = PlanarNC(n, {0.5, -0.25, 1.0, 0.3});
  const NPolynomial p = NPolynomial::from_roots(n, {r, r});
  const auto a = factor(p);
  EXPECT_EQ(a.front().assembly_count, 1U);
  EXPECT_LT(reexpansion_error(p, a.front()), 1e-8);
}

TEST(Polynomial, Normalization) {
  const int n = 4;
  const PlanarNC lead(n, {2.0, 0.5, 0.0, 0.1});
  const PlanarNC a1(n, {1.0, 0.0, -1.0, 0.0});
  const PlanarNC a2(n, {0.0, 3.0, 0.0, 1.0});
  const NPolynomial p = NPolynomial::normalized(n, {lead, a1, a2});
  EXPECT_LT(max_abs_diff(mul(lead, p.coeffs()[0]), a1), 1e-14);
  EXPECT_LT(max_abs_diff(mul(lead, p.coeffs()[1]), a2), 1e-14);
  const PlanarNC nodal = canonical_basis(n).e[0];
  EXPECT_THROW(NPolynomial::normalized(n, {nodal, a1}), InvalidArgument);
  EXPECT_THROW(NPolynomial(n, {}), InvalidArgument);
}

TEST(Polynomial, EnumerationLimits) {
  oracle::Rng rng(66);
  std::vector<PlanarNC> roots;
  for (int j = 0; j < 5; ++j) roots.push_back(rng.value(8));
  const NPolynomial p = NPolynomial::from_roots(8, roots);
  const auto a = factor(p, 10);
  EXPECT_EQ(a.size(), 10U);
  EXPECT_EQ(a.front().assembly_count, 120U * 120U * 120U);
  EXPECT_THROW(factor(p, 10, true), AssemblyOverflow);
}
