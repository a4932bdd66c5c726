#include "pnc/kernels.hpp"

#include <algorithm>
#include <exception>

#include "pnc/canonical.hpp"
#include "pnc/detail/product.hpp"
#include "pnc/error.hpp"

namespace pnc::kernels {

namespace {

void require_shape(const Batch& a, const Batch& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  if (a.size() != b.size()) throw InvalidArgument("batch sizes differ");
}

void transform_row(const TrigTable& t, const double* x, double* out) {
  const int n = t.n;
  for (int k = 1; k <= n / 2; ++k) {
    double v = 0.0;
    double vt = 0.0;
    for (int p = 0; p < n; ++p) {
      v += x[p] * t.c(k, p);
      vt += x[p] * t.s(k, p);
    }
    out[2 * (k - 1)] = v;
    out[2 * (k - 1) + 1] = vt;
  }
}

void canonical_product_row(const TrigTable& t, const double* x, const double* y, double* r,
                           double* scratch) {
  const int n = t.n;
  double* zx = scratch;
  double* zy = scratch + n;
  transform_row(t, x, zx);
  transform_row(t, y, zy);
  for (int k = 0; k < n / 2; ++k) {
    const double a = zx[2 * k];
    const double b = zx[2 * k + 1];
    const double c = zy[2 * k];
    const double d = zy[2 * k + 1];
    zx[2 * k] = a * c - b * d;
    zx[2 * k + 1] = a * d + b * c;
  }
  const double w = 2.0 / n;
  for (int p = 0; p < n; ++p) {
    double acc = 0.0;
    for (int k = 1; k <= n / 2; ++k) acc += zx[2 * (k - 1)] * t.c(k, p) + zx[2 * k - 1] * t.s(k, p);
    r[p] = w * acc;
  }
}

}  // namespace

Batch::Batch(int n, std::size_t count)
    : n_(n), count_(count), data_(count * static_cast<std::size_t>(n), 0.0) {
  require_even_dimension(n);
}

Batch::Batch(const std::vector<PlanarNC>& values)
    : Batch(values.empty() ? 2 : values.front().dim(), values.size()) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].dim() != n_) throw DimensionMismatch(n_, values[i].dim());
    const auto c = values[i].coeffs();
    std::copy(c.begin(), c.end(), row(i));
  }
}

PlanarNC Batch::at(std::size_t i) const {
  const double* r = row(i);
  return PlanarNC(n_, std::vector<double>(r, r + n_));
}

namespace serial {

void mul_direct(const Batch& a, const Batch& b, Batch& out) {
  require_shape(a, b);
  require_shape(a, out);
  for (std::size_t i = 0; i < a.size(); ++i) {
    detail::negacyclic_product(a.row(i), b.row(i), out.row(i), a.dim());
  }
}

void mul_canonical(const Batch& a, const Batch& b, Batch& out) {
  require_shape(a, b);
  require_shape(a, out);
  const TrigTable& t = trig_table(a.dim());
  std::vector<double> scratch(2 * static_cast<std::size_t>(a.dim()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    canonical_product_row(t, a.row(i), b.row(i), out.row(i), scratch.data());
  }
}

void to_canonical(const Batch& a, Batch& out) {
  require_shape(a, out);
  const TrigTable& t = trig_table(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) transform_row(t, a.row(i), out.row(i));
}

std::vector<PlanarNC> evaluate(const std::function<PlanarNC(const PlanarNC&)>& f,
                               const std::vector<PlanarNC>& points) {
  std::vector<PlanarNC> out;
  out.reserve(points.size());
  for (const PlanarNC& u : points) out.push_back(f(u));
  return out;
}

}  // namespace serial

namespace parallel {

void mul_direct(const Batch& a, const Batch& b, Batch& out) {
  require_shape(a, b);
  require_shape(a, out);
  const auto count = static_cast<std::ptrdiff_t>(a.size());
  const int n = a.dim();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(i);
    detail::negacyclic_product(a.row(j), b.row(j), out.row(j), n);
  }
}

void mul_canonical(const Batch& a, const Batch& b, Batch& out) {
  require_shape(a, b);
  require_shape(a, out);
  const TrigTable& t = trig_table(a.dim());
  const auto count = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel
  {
    std::vector<double> scratch(2 * static_cast<std::size_t>(a.dim()));
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto j = static_cast<std::size_t>(i);
      canonical_product_row(t, a.row(j), b.row(j), out.row(j), scratch.data());
    }
  }
}

void to_canonical(const Batch& a, Batch& out) {
  require_shape(a, out);
  const TrigTable& t = trig_table(a.dim());
  const auto count = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(i);
    transform_row(t, a.row(j), out.row(j));
  }
}

std::vector<PlanarNC> evaluate(const std::function<PlanarNC(const PlanarNC&)>& f,
                               const std::vector<PlanarNC>& points) {
  if (points.empty()) return {};
  std::vector<PlanarNC> out(points.size(), PlanarNC(points.front().dim()));
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(i);
    try {
      out[j] = f(points[j]);
    } catch (...) {
#pragma omp critical(pnc_evaluate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace parallel

}  // namespace pnc::kernels
