// Built with -mavx2 only (no FMA) so products and sums round exactly as the
// scalar reference does.
#include <immintrin.h>

#include "table.hpp"

namespace microregion::kernels::detail {
namespace {

double hsum_lanes(__m256d acc) {
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double s = hsum_lanes(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void natural_gradient(const double* z, const double* mu, const double* sigma, double* g_mu,
                      double* g_ls, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vz = _mm256_loadu_pd(z + i);
    const __m256d vm = _mm256_loadu_pd(mu + i);
    const __m256d r = _mm256_div_pd(_mm256_sub_pd(vz, vm), _mm256_loadu_pd(sigma + i));
    _mm256_storeu_pd(g_mu + i, _mm256_sub_pd(vm, vz));
    _mm256_storeu_pd(g_ls + i, _mm256_mul_pd(_mm256_sub_pd(one, _mm256_mul_pd(r, r)), half));
  }
  for (; i < n; ++i) {
    const double r = (z[i] - mu[i]) / sigma[i];
    g_mu[i] = mu[i] - z[i];
    g_ls[i] = (1.0 - r * r) * 0.5;
  }
}

double nll_sum(const double* z, const double* mu, const double* ls, const double* var,
               std::size_t n) {
  const __m256d c = _mm256_set1_pd(kHalfLog2Pi);
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(z + i), _mm256_loadu_pd(mu + i));
    const __m256d quad = _mm256_div_pd(_mm256_mul_pd(d, d), _mm256_mul_pd(two, _mm256_loadu_pd(var + i)));
    acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_add_pd(c, _mm256_loadu_pd(ls + i)), quad));
  }
  double s = hsum_lanes(acc);
  for (; i < n; ++i) {
    const double d = z[i] - mu[i];
    s += (kHalfLog2Pi + ls[i]) + (d * d) / (2.0 * var[i]);
  }
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

}  // namespace

const Table kAvx2Table = {dot, natural_gradient, nll_sum, axpy};

}  // namespace microregion::kernels::detail
