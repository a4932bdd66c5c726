#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cosexp_identities.hpp"
#include "oracles.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/error.hpp"
#include "pnc/functions.hpp"

using namespace pnc;
using namespace pnc::cosexp;
constexpr double kPi = std::numbers::pi;

TEST(Cosexp, ValuesAtZero) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < n; ++k) {
      const double expected = k == 0 ? 1.0 : 0.0;
      EXPECT_EQ(f_series(n, k, 0.0), expected);
      EXPECT_EQ(f_closed(n, k, 0.0), expected);
      EXPECT_EQ(g_polar(n, k, 0.0), expected);
    }
  }
  const ComplexPair c = f_complex(5, 0, 0.0, 0.0);
  EXPECT_EQ(c.re, 1.0);
  EXPECT_EQ(c.im, 0.0);
}

TEST(Cosexp, LowOrderIdentifications) {
  for (double y : {-3.0, -0.4, 0.9, 2.5}) {
    EXPECT_NEAR(f_series(2, 0, y), std::cos(y), 1e-14);
    EXPECT_NEAR(f_series(2, 1, y), std::sin(y), 1e-14);
    EXPECT_NEAR(f_closed(2, 0, y), std::cos(y), 1e-14);
    EXPECT_NEAR(g_polar(1, 0, y), std::exp(y), 1e-13 * std::exp(y));
    EXPECT_NEAR(g_polar(2, 0, y), std::cosh(y), 1e-13 * std::cosh(y));
    EXPECT_NEAR(g_polar(2, 1, y), std::sinh(y), 1e-13 * std::cosh(y));
  }
  EXPECT_NEAR(f_closed(2, 1, kPi / 2), 1.0, 1e-15);
}

TEST(Cosexp, ClosedFormMatchesSeries) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i <= 100; ++i) {
        const double y = -5.0 + 0.1 * i;
        const double ref = oracle::cosexp_series(n, k, y);
        EXPECT_NEAR(f_closed(n, k, y), ref, 1e-10) << n << ' ' << k << ' ' << y;
        EXPECT_NEAR(f_series(n, k, y), ref, 1e-10) << n << ' ' << k << ' ' << y;
      }
    }
  }
  EXPECT_NEAR(f_series(6, 2, 1.3), f_closed(6, 2, 1.3), 1e-12);
}

TEST(Cosexp, PlusSeriesMatchesOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      for (double y : {-2.0, -0.5, 0.7, 3.0}) {
        const double ref = oracle::cosexp_plus_series(n, k, y);
        EXPECT_NEAR(g_polar(n, k, y), ref, 1e-12 * std::max(1.0, std::abs(ref)));
        EXPECT_NEAR(g_closed_complex(n, k, y, 0.0).re, ref, 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST(Cosexp, Parity) {
  for (int n = 2; n <= 10; n += 2) {
    for (int k = 0; k < n; ++k) {
      for (double y : {0.3, 1.1, 2.9}) {
        const double s = k % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(f_closed(n, k, -y), s * f_closed(n, k, y), 1e-12);
      }
    }
  }
}

TEST(Cosexp, OddOrderRelation) {
  for (int n : {3, 5}) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i <= 20; ++i) {
        const double y = -4.0 + 0.4 * i;
        const double s = k % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(f_closed(n, k, y), s * g_polar(n, k, -y), 1e-10);
      }
    }
  }
}

TEST(Cosexp, RotatedArgumentRelation) {
  // n = 4p + 2: f_nk(y) = exp(-i pi k / 2) g_nk(i y).
  for (int n : {2, 6, 10}) {
    for (int k = 0; k < n; ++k) {
      for (double y : {-2.5, -0.3, 1.4, 3.3}) {
        const ComplexPair g = g_complex(n, k, 0.0, y);
        const std::complex<double> rhs = std::polar(1.0, -kPi * k / 2) * std::complex<double>(g.re, g.im);
        EXPECT_NEAR(rhs.real(), f_closed(n, k, y), 1e-10);
        EXPECT_NEAR(rhs.imag(), 0.0, 1e-10);
      }
    }
  }
}

TEST(Cosexp, ComplexClosedFormsMatchSeries) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      for (auto [re, im] : {std::pair{0.5, -1.2}, std::pair{-1.7, 0.4}, std::pair{2.0, 2.0}}) {
        const ComplexPair a = f_complex(n, k, re, im);
        const ComplexPair b = f_closed_complex(n, k, re, im);
        EXPECT_NEAR(a.re, b.re, 1e-11);
        EXPECT_NEAR(a.im, b.im, 1e-11);
        const ComplexPair c = g_complex(n, k, re, im);
        const ComplexPair d = g_closed_complex(n, k, re, im);
        EXPECT_NEAR(c.re, d.re, 1e-11);
        EXPECT_NEAR(c.im, d.im, 1e-11);
      }
    }
  }
}

TEST(Cosexp, ExpAlongAxes) {
  EXPECT_LT(max_abs_diff(exp_hk(6, 3, 0.0), PlanarNC::one(6)), 1e-15);
  const PlanarNC e = exp_hk(2, 1, 0.8);
  EXPECT_NEAR(e[0], std::cos(0.8), 1e-15);
  EXPECT_NEAR(e[1], std::sin(0.8), 1e-15);
  oracle::Rng rng(20);
  for (int n : {2, 4, 6, 8}) {
    for (int k = 1; k < n; ++k) {
      const double y = rng.uniform(-2.0, 2.0);
      const auto x = oracle::coeffs(y * PlanarNC::basis(n, k));
      const auto ref = oracle::exp_series(x);
      EXPECT_LT(oracle::max_diff(oracle::coeffs(exp_hk(n, k, y)), ref), 1e-10) << n << ' ' << k;
    }
  }
}

TEST(Cosexp, AbSums) {
  const AbSums z = ab_sums(6, 0.0);
  for (int k = 0; k < 6; ++k) {
    EXPECT_NEAR(z.a[static_cast<std::size_t>(k)], 1.0, 1e-15);
    EXPECT_NEAR(z.b[static_cast<std::size_t>(k)], 0.0, 1e-15);
    EXPECT_NEAR(z.g2[static_cast<std::size_t>(k)], 1.0, 1e-15);
  }
  oracle::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const double y = rng.uniform(-4.0, 4.0);
    for (int n : {4, 6, 8}) {
      const AbSums s = ab_sums(n, y);
      for (int k = 1; k <= n; ++k) {
        const double a = kPi * (2 * k - 1) / n;
        const double amp = std::exp(y * std::cos(a));
        EXPECT_NEAR(s.a[static_cast<std::size_t>(k - 1)], amp * std::cos(y * std::sin(a)), 1e-10 * std::max(1.0, amp));
        EXPECT_NEAR(s.b[static_cast<std::size_t>(k - 1)], amp * std::sin(y * std::sin(a)), 1e-10 * std::max(1.0, amp));
      }
      EXPECT_LT(identity::g_product(n, y), 1e-10);
    }
  }
}

TEST(Cosexp, IdentitySuite) {
  oracle::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const double y = rng.uniform(-3.0, 3.0);
    const double z = rng.uniform(-3.0, 3.0);
    for (int n = 1; n <= 12; ++n) {
      EXPECT_LT(identity::sum_of_squares(n, y), 1e-10) << n;
      EXPECT_LT(identity::addition(n, y, z), 1e-10) << n;
      EXPECT_LT(identity::addition(n, y, y), 1e-10) << n;
      EXPECT_LT(identity::inverse_pair(n, y), 1e-10) << n;
      EXPECT_LT(identity::derivative_chain(n, y), 1e-8) << n;
      if (n % 4 == 0) {
        EXPECT_LT(identity::alternating_squares(n, y), 1e-10) << n;
      }
      if (n % 2 == 0) {
        EXPECT_LT(identity::power(n, y / 2), 1e-9) << n;
      }
    }
  }
}

TEST(Cosexp, DifferentialEquationOnTruncatedSeries) {
  // Shifting a series n places is its n-th derivative; for f_nk it gives -f_nk.
  for (int n : {3, 4, 6}) {
    for (int k = 0; k < n; ++k) {
      const double y = 0.9;
      double shifted = 0.0;
      double term = 1.0;
      for (int j = 1; j <= k; ++j) term *= y / j;
      // d^n/dy^n of sum_p (-1)^p y^(k+pn)/(k+pn)! = sum_{p>=1} (-1)^p y^(k+(p-1)n)/(k+(p-1)n)!
      double t = term;
      double s = -1.0;
      for (int p = 1; p < 60; ++p) {
        shifted += s * t;
        for (int q = 1; q <= n; ++q) t *= y / (k + (p - 1) * n + q);
        s = -s;
      }
      EXPECT_NEAR(shifted, -f_series(n, k, y), 1e-14);
    }
  }
}

TEST(Cosexp, RejectsBadIndices) {
  EXPECT_THROW(f_closed(0, 0, 1.0), InvalidArgument);
  EXPECT_THROW(f_closed(4, 4, 1.0), InvalidArgument);
  EXPECT_THROW(f_series(4, -1, 1.0), InvalidArgument);
}
