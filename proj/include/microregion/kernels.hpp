#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace microregion::kernels {

/// Instruction-set variants of the data-parallel kernels. Every variant
/// accumulates in the same four-lane order as the scalar reference, so results
/// are bit-identical whichever one is active.
enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// The variant in use. Chosen on first call: MICROREGION_ISA=scalar|avx2|neon
/// if set and available, otherwise the widest available.
Isa active_isa();
/// Throws InvalidArgument if `isa` is not available on this machine/build.
void set_isa(Isa isa);

/// Sum of a[i]*b[i].
double dot(std::span<const double> a, std::span<const double> b);

/// Natural gradient of the Normal NLL for each row, given sigma = exp(log_sigma):
/// g_mu = mu - z, g_log_sigma = (1 - ((z - mu)/sigma)^2) / 2.
void natural_gradient(std::span<const double> z, std::span<const double> mu,
                      std::span<const double> sigma, std::span<double> g_mu,
                      std::span<double> g_log_sigma);

/// Sum of 0.5*ln(2*pi) + log_sigma + (z - mu)^2 / (2*var) with var = exp(2*log_sigma).
double nll_sum(std::span<const double> z, std::span<const double> mu,
               std::span<const double> log_sigma, std::span<const double> var);

/// y[i] += a * x[i].
void axpy(double a, std::span<const double> x, std::span<double> y);

}  // namespace microregion::kernels
