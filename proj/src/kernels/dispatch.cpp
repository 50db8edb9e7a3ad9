#include <atomic>
#include <cstdlib>
#include <string>

#include "microregion/error.hpp"
#include "microregion/kernels.hpp"
#include "table.hpp"

namespace microregion::kernels {
namespace {

const detail::Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &detail::kScalarTable;
    case Isa::kAvx2:
#if defined(MICROREGION_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &detail::kAvx2Table;
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(MICROREGION_HAVE_NEON)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Isa initial_isa() {
  if (const char* env = std::getenv("MICROREGION_ISA")) {
    const std::string want(env);
    for (const Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == isa_name(isa) && table_for(isa) != nullptr) return isa;
    }
  }
  for (const Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (table_for(isa) != nullptr) return isa;
  }
  return Isa::kScalar;
}

std::atomic<int> g_isa{-1};

const detail::Table& active() {
  int v = g_isa.load(std::memory_order_acquire);
  if (v < 0) {
    int expected = -1;
    g_isa.compare_exchange_strong(expected, static_cast<int>(initial_isa()));
    v = g_isa.load(std::memory_order_acquire);
  }
  return *table_for(static_cast<Isa>(v));
}

void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw InvalidArgument("kernel inputs differ in length");
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) { return table_for(isa) != nullptr; }

Isa active_isa() {
  active();
  return static_cast<Isa>(g_isa.load(std::memory_order_acquire));
}

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  g_isa.store(static_cast<int>(isa), std::memory_order_release);
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same(a.size(), b.size());
  return active().dot(a.data(), b.data(), a.size());
}

void natural_gradient(std::span<const double> z, std::span<const double> mu,
                      std::span<const double> sigma, std::span<double> g_mu,
                      std::span<double> g_log_sigma) {
  require_same(z.size(), mu.size());
  require_same(z.size(), sigma.size());
  require_same(z.size(), g_mu.size());
  require_same(z.size(), g_log_sigma.size());
  active().natural_gradient(z.data(), mu.data(), sigma.data(), g_mu.data(), g_log_sigma.data(),
                            z.size());
}

double nll_sum(std::span<const double> z, std::span<const double> mu,
               std::span<const double> log_sigma, std::span<const double> var) {
  require_same(z.size(), mu.size());
  require_same(z.size(), log_sigma.size());
  require_same(z.size(), var.size());
  return active().nll_sum(z.data(), mu.data(), log_sigma.data(), var.data(), z.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  require_same(x.size(), y.size());
  active().axpy(a, x.data(), y.data(), x.size());
}

}  // namespace microregion::kernels
