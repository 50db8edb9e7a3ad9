#pragma once

#include <cstddef>

namespace microregion::kernels::detail {

inline constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

struct Table {
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*natural_gradient)(const double* z, const double* mu, const double* sigma, double* g_mu,
                           double* g_ls, std::size_t n);
  double (*nll_sum)(const double* z, const double* mu, const double* ls, const double* var,
                    std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
};

extern const Table kScalarTable;
#if defined(MICROREGION_HAVE_AVX2)
extern const Table kAvx2Table;
#endif
#if defined(MICROREGION_HAVE_NEON)
extern const Table kNeonTable;
#endif

}  // namespace microregion::kernels::detail
