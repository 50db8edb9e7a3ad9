#include "table.hpp"

// Reference kernels. Reductions keep four partial sums (element i goes to
// lane i % 4 over the largest multiple of 4), combine them as
// (l0 + l1) + (l2 + l3), then add the tail in order. The vector variants
// reproduce exactly this sequence of roundings.

namespace microregion::kernels::detail {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) l[j] += a[i + j] * b[i + j];
  }
  double s = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void natural_gradient(const double* z, const double* mu, const double* sigma, double* g_mu,
                      double* g_ls, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (z[i] - mu[i]) / sigma[i];
    g_mu[i] = mu[i] - z[i];
    g_ls[i] = (1.0 - r * r) * 0.5;
  }
}

inline double nll_term(double z, double mu, double ls, double var) {
  const double d = z - mu;
  return (kHalfLog2Pi + ls) + (d * d) / (2.0 * var);
}

double nll_sum(const double* z, const double* mu, const double* ls, const double* var,
               std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) l[j] += nll_term(z[i + j], mu[i + j], ls[i + j], var[i + j]);
  }
  double s = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) s += nll_term(z[i], mu[i], ls[i], var[i]);
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

}  // namespace

const Table kScalarTable = {dot, natural_gradient, nll_sum, axpy};

}  // namespace microregion::kernels::detail
