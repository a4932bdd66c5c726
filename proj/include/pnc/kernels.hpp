#pragma once

// Batch kernels over many n-complex values stored contiguously. Each kernel
// has a serial reference and an OpenMP version; both produce bitwise
// identical results because every item is computed by the same scalar code.

#include <cstddef>
#include <functional>
#include <vector>

#include "pnc/planar_nc.hpp"

namespace pnc::kernels {

/// `count` values of dimension n, row-major.
class Batch {
 public:
  Batch(int n, std::size_t count);
  explicit Batch(const std::vector<PlanarNC>& values);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  double* row(std::size_t i) noexcept { return data_.data() + i * static_cast<std::size_t>(n_); }
  const double* row(std::size_t i) const noexcept {
    return data_.data() + i * static_cast<std::size_t>(n_);
  }
  PlanarNC at(std::size_t i) const;
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  int n_;
  std::size_t count_;
  std::vector<double> data_;
};

namespace serial {
void mul_direct(const Batch& a, const Batch& b, Batch& out);
void mul_canonical(const Batch& a, const Batch& b, Batch& out);
/// Canonical images: for item i, plane k, out.row(i)[2(k-1)] = v_k and
/// out.row(i)[2(k-1)+1] = vt_k.
void to_canonical(const Batch& a, Batch& out);
std::vector<PlanarNC> evaluate(const std::function<PlanarNC(const PlanarNC&)>& f,
                               const std::vector<PlanarNC>& points);
}  // namespace serial

namespace parallel {
void mul_direct(const Batch& a, const Batch& b, Batch& out);
void mul_canonical(const Batch& a, const Batch& b, Batch& out);
void to_canonical(const Batch& a, Batch& out);
/// f must be safe to call concurrently. The first exception thrown by any
/// call is rethrown after the loop.
std::vector<PlanarNC> evaluate(const std::function<PlanarNC(const PlanarNC&)>& f,
                               const std::vector<PlanarNC>& points);
}  // namespace parallel

}  // namespace pnc::kernels
