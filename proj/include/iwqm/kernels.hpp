#pragma once

// Data-parallel inner loops of the grid propagator and of batched
// eigenfunction sampling.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant chosen
// at runtime. The scalar reductions accumulate in the same four-lane order as
// the vector code, so both backends return bit-identical results.

#include <span>
#include <string_view>

#include "iwqm/types.hpp"

namespace iwqm::kernels {

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend backend);

/// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available();

/// Backend used by the dispatching entry points; fixed for the process.
Backend active_backend();

/// values[k] *= factors[k]
void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors);
/// sum_k |values[k]|^2
double sum_abs2(std::span<const Complex> values);
/// sum_k weights[k] |values[k]|^2
double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights);
/// out[k] = sum_j coeffs[j] xs[k]^j by Horner's rule.
void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out);

namespace scalar {
void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors);
double sum_abs2(std::span<const Complex> values);
double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights);
void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out);
}  // namespace scalar

// Only call these when avx2_available() is true.
namespace avx2 {
void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors);
double sum_abs2(std::span<const Complex> values);
double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights);
void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out);
}  // namespace avx2

}  // namespace iwqm::kernels
