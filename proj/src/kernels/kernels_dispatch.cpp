#include "iwqm/error.hpp"
#include "iwqm/kernels.hpp"

namespace iwqm::kernels {

#ifndef IWQM_HAVE_AVX2_KERNELS
namespace avx2 {
// Stubs for targets without the AVX2 translation unit; avx2_available() is
// false there, so the dispatcher never reaches them.
void multiply_inplace(std::span<Complex>, std::span<const Complex>) {
  throw Error("AVX2 kernels are not built for this target");
}
double sum_abs2(std::span<const Complex>) { throw Error("AVX2 kernels are not built for this target"); }
double weighted_sum_abs2(std::span<const Complex>, std::span<const double>) {
  throw Error("AVX2 kernels are not built for this target");
}
void horner_real(std::span<const Complex>, std::span<const double>, std::span<Complex>) {
  throw Error("AVX2 kernels are not built for this target");
}
}  // namespace avx2
#endif

std::string_view to_string(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool avx2_available() {
#if defined(IWQM_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend backend = avx2_available() ? Backend::avx2 : Backend::scalar;
  return backend;
}

void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors) {
  if (active_backend() == Backend::avx2) return avx2::multiply_inplace(values, factors);
  scalar::multiply_inplace(values, factors);
}

double sum_abs2(std::span<const Complex> values) {
  if (active_backend() == Backend::avx2) return avx2::sum_abs2(values);
  return scalar::sum_abs2(values);
}

double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights) {
  if (active_backend() == Backend::avx2) return avx2::weighted_sum_abs2(values, weights);
  return scalar::weighted_sum_abs2(values, weights);
}

void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out) {
  if (active_backend() == Backend::avx2) return avx2::horner_real(coeffs, xs, out);
  scalar::horner_real(coeffs, xs, out);
}

}  // namespace iwqm::kernels
