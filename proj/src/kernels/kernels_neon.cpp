// AArch64 variant. Two 128-bit registers stand in for the four scalar lanes.
#include <arm_neon.h>

#include "table.hpp"

namespace microregion::kernels::detail {
namespace {

double hsum_lanes(float64x2_t lo, float64x2_t hi) {
  return (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
         (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double s = hsum_lanes(lo, hi);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void natural_gradient(const double* z, const double* mu, const double* sigma, double* g_mu,
                      double* g_ls, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t half = vdupq_n_f64(0.5);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vz = vld1q_f64(z + i);
    const float64x2_t vm = vld1q_f64(mu + i);
    const float64x2_t r = vdivq_f64(vsubq_f64(vz, vm), vld1q_f64(sigma + i));
    vst1q_f64(g_mu + i, vsubq_f64(vm, vz));
    vst1q_f64(g_ls + i, vmulq_f64(vsubq_f64(one, vmulq_f64(r, r)), half));
  }
  for (; i < n; ++i) {
    const double r = (z[i] - mu[i]) / sigma[i];
    g_mu[i] = mu[i] - z[i];
    g_ls[i] = (1.0 - r * r) * 0.5;
  }
}

float64x2_t nll_pair(const double* z, const double* mu, const double* ls, const double* var) {
  const float64x2_t d = vsubq_f64(vld1q_f64(z), vld1q_f64(mu));
  const float64x2_t quad = vdivq_f64(vmulq_f64(d, d), vmulq_f64(vdupq_n_f64(2.0), vld1q_f64(var)));
  return vaddq_f64(vaddq_f64(vdupq_n_f64(kHalfLog2Pi), vld1q_f64(ls)), quad);
}

double nll_sum(const double* z, const double* mu, const double* ls, const double* var,
               std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, nll_pair(z + i, mu + i, ls + i, var + i));
    hi = vaddq_f64(hi, nll_pair(z + i + 2, mu + i + 2, ls + i + 2, var + i + 2));
  }
  double s = hsum_lanes(lo, hi);
  for (; i < n; ++i) {
    const double d = z[i] - mu[i];
    s += (kHalfLog2Pi + ls[i]) + (d * d) / (2.0 * var[i]);
  }
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

}  // namespace

const Table kNeonTable = {dot, natural_gradient, nll_sum, axpy};

}  // namespace microregion::kernels::detail
