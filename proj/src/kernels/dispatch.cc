/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <cstring>

#include "internal.h"

namespace infercost::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(INFERCOST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool ForcedScalar() {
  const char* env = std::getenv("INFERCOST_FORCE_SCALAR");
  return env != nullptr && *env != '\0' && std::strcmp(env, "0") != 0;
}

std::atomic<const KernelTable*>& ActiveSlot() {
  static std::atomic<const KernelTable*> slot{
      ForcedScalar() ? &scalar::kTable : &table(detected_isa())};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "?";
}

Isa detected_isa() {
  static const Isa isa = CpuHasAvx2() ? Isa::kAvx2 : Isa::kScalar;
  return isa;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> isas{Isa::kScalar};
  if (detected_isa() == Isa::kAvx2) isas.push_back(Isa::kAvx2);
  return isas;
}

const KernelTable& table(Isa isa) {
#if defined(INFERCOST_HAVE_AVX2)
  if (isa == Isa::kAvx2 && CpuHasAvx2()) return avx2::kTable;
#endif
  (void)isa;
  return scalar::kTable;
}

Isa active_isa() { return ActiveSlot().load()->isa; }

bool set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) return false;
  ActiveSlot().store(&table(isa));
  return true;
}

const KernelTable& active_table() { return *ActiveSlot().load(); }

double sum(std::span<const double> x) { return active_table().sum(x.data(), x.size()); }

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return sum(x) / static_cast<double>(x.size());
}

CrossMoments centered_moments(std::span<const double> x, std::span<const double> y,
                              double mean_x, double mean_y) {
  assert(x.size() == y.size());
  return active_table().centered_moments(x.data(), y.data(), x.size(), mean_x, mean_y);
}

double residual_sum_squares(std::span<const double> x, std::span<const double> y, double slope,
                            double intercept) {
  assert(x.size() == y.size());
  return active_table().residual_sum_squares(x.data(), y.data(), x.size(), slope, intercept);
}

void divide(std::span<const double> num, std::span<const double> den, std::span<double> out) {
  assert(num.size() == den.size() && num.size() == out.size());
  active_table().divide(num.data(), den.data(), out.data(), num.size());
}

void affine(std::span<const double> x, double slope, double intercept, std::span<double> out) {
  assert(x.size() == out.size());
  active_table().affine(x.data(), slope, intercept, out.data(), x.size());
}

}  // namespace infercost::kernels
