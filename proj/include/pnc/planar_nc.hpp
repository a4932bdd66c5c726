#pragma once

// Planar n-complex numbers: the real algebra R[h]/(h^n + 1) for even n,
// stored by their n coefficients along 1, h_1, ..., h_{n-1}.

#include <span>
#include <vector>

namespace pnc {

inline constexpr double kDefaultNodalTolerance = 1e-12;

/// Throws InvalidArgument unless n is even and >= 2.
void require_even_dimension(int n);

class PlanarNC {
 public:
  /// The zero element of dimension n.
  explicit PlanarNC(int n);
  /// Takes ownership of the coefficients; requires coeffs.size() == n and
  /// all entries finite.
  PlanarNC(int n, std::vector<double> coeffs);

  static PlanarNC one(int n);
  static PlanarNC scalar(int n, double c);
  /// The unit h_p (h_0 = 1).
  static PlanarNC basis(int n, int p);

  int dim() const noexcept { return n_; }
  std::span<const double> coeffs() const noexcept { return x_; }
  double operator[](int p) const { return x_[static_cast<std::size_t>(p)]; }

  bool operator==(const PlanarNC&) const = default;

 private:
  int n_;
  std::vector<double> x_;
};

struct BasisProduct {
  int sign;
  int index;
  bool operator==(const BasisProduct&) const = default;
};

/// h_j h_k = sign * h_index.
BasisProduct basis_product(int j, int k, int n);

PlanarNC add(const PlanarNC& u, const PlanarNC& v);
PlanarNC sub(const PlanarNC& u, const PlanarNC& v);
PlanarNC negate(const PlanarNC& u);
PlanarNC scale(const PlanarNC& u, double c);

/// Direct coefficient-space product (signed negacyclic convolution).
///
/// Each output coefficient sums the n products x_l y_{k-l} by visiting the
/// pair {l, k-l mod n} together, in increasing order of its smaller index.
/// Both members of a pair map to the same two products under u <-> v, so the
/// result is bitwise commutative.
PlanarNC mul(const PlanarNC& u, const PlanarNC& v);

/// nu = prod_k rho_k^2, the determinant of the multiplication matrix.
double determinant(const PlanarNC& u);
/// rho = nu^(1/n).
double amplitude(const PlanarNC& u);
/// Euclidean norm of the coefficient vector.
double modulus(const PlanarNC& u);

/// Multiplicative inverse via per-plane complex reciprocals.
/// Throws NodalSingularity listing every plane with
/// rho_k <= tol * max(1, |u|).
PlanarNC inverse(const PlanarNC& u, double tol = kDefaultNodalTolerance);

inline PlanarNC operator+(const PlanarNC& u, const PlanarNC& v) { return add(u, v); }
inline PlanarNC operator-(const PlanarNC& u, const PlanarNC& v) { return sub(u, v); }
inline PlanarNC operator-(const PlanarNC& u) { return negate(u); }
inline PlanarNC operator*(const PlanarNC& u, const PlanarNC& v) { return mul(u, v); }
inline PlanarNC operator*(double c, const PlanarNC& u) { return scale(u, c); }
inline PlanarNC operator*(const PlanarNC& u, double c) { return scale(u, c); }

/// Largest absolute coefficient difference; throws on dimension mismatch.
double max_abs_diff(const PlanarNC& u, const PlanarNC& v);

}  // namespace pnc
