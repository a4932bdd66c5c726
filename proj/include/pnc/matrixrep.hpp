#pragma once

// The regular representation u -> U (multiplication by u as an n x n real
// matrix) and its block diagonalization into n/2 rotation-scaling blocks.

#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc {

/// Dense row-major square matrix.
class RepMatrix {
 public:
  explicit RepMatrix(int size);

  int size() const noexcept { return size_; }
  double& operator()(int r, int c) { return a_[index(r, c)]; }
  double operator()(int r, int c) const { return a_[index(r, c)]; }
  const std::vector<double>& data() const noexcept { return a_; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(c);
  }
  int size_;
  std::vector<double> a_;
};

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
RepMatrix transpose(const RepMatrix& a);
double max_abs_diff(const RepMatrix& a, const RepMatrix& b);

/// U with U(r, c) = x_{c-r} for c >= r and -x_{n+c-r} otherwise. Row 0 is
/// the coefficient vector, and matrix_rep(u v) = matrix_rep(u) matrix_rep(v).
RepMatrix matrix_rep(const PlanarNC& u);

/// Orthogonal T whose rows 2(k-1), 2(k-1)+1 are sqrt(2/n) cos(pi(2k-1)p/n)
/// and sqrt(2/n) sin(pi(2k-1)p/n).
RepMatrix transform_matrix(int n);

/// T U T^T, whose diagonal 2x2 blocks are [[v_k, vt_k], [-vt_k, v_k]].
/// Off-block entries are returned as exact zeros; any whose computed value
/// exceeds 1e-10 * |u| raises BlockStructureViolation.
RepMatrix block_diagonalize(const PlanarNC& u);

}  // namespace pnc
