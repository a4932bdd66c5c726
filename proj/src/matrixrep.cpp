#include "pnc/matrixrep.hpp"

#include <algorithm>
#include <cmath>

#include "pnc/canonical.hpp"
#include "pnc/error.hpp"

namespace pnc {

namespace {

constexpr double kOffBlockTolerance = 1e-10;

}  // namespace

RepMatrix::RepMatrix(int size)
    : size_(size), a_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {
  if (size < 1) throw InvalidArgument("matrix size must be positive");
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  const int n = a.size();
  RepMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RepMatrix transpose(const RepMatrix& a) {
  RepMatrix t(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

double max_abs_diff(const RepMatrix& a, const RepMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

RepMatrix matrix_rep(const PlanarNC& u) {
  const int n = u.dim();
  RepMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = c >= r ? u[c - r] : -u[n + c - r];
  }
  return m;
}

RepMatrix transform_matrix(int n) {
  const TrigTable& t = trig_table(n);
  const double w = std::sqrt(2.0 / n);
  RepMatrix m(n);
  for (int k = 1; k <= n / 2; ++k) {
    for (int p = 0; p < n; ++p) {
      m(2 * (k - 1), p) = w * t.c(k, p);
      m(2 * (k - 1) + 1, p) = w * t.s(k, p);
    }
  }
  return m;
}

RepMatrix block_diagonalize(const PlanarNC& u) {
  const int n = u.dim();
  const RepMatrix t = transform_matrix(n);
  RepMatrix b = t * matrix_rep(u) * transpose(t);
  const double limit = kOffBlockTolerance * modulus(u);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r / 2 == c / 2) continue;
      if (std::abs(b(r, c)) > limit) {
        throw BlockStructureViolation("off-block entry survived the block diagonalization");
      }
      b(r, c) = 0.0;
    }
  }
  return b;
}

}  // namespace pnc
