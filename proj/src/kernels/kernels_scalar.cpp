#include <array>
#include <cstddef>

#include "iwqm/error.hpp"
#include "iwqm/kernels.hpp"

namespace iwqm::kernels::scalar {

void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors) {
  if (values.size() != factors.size()) throw DimensionMismatch("multiply_inplace: length mismatch");
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double ar = values[k].real(), ai = values[k].imag();
    const double br = factors[k].real(), bi = factors[k].imag();
    values[k] = Complex{ar * br - ai * bi, ai * br + ar * bi};
  }
}

// Lane j of the accumulator sees the doubles 4m + j of the interleaved
// (re, im) array, matching a 256-bit register holding two complex values.
double sum_abs2(std::span<const Complex> values) {
  std::array<double, 4> acc{};
  const std::size_t pairs = values.size() / 2;
  for (std::size_t m = 0; m < pairs; ++m) {
    const Complex a = values[2 * m], b = values[2 * m + 1];
    acc[0] += a.real() * a.real();
    acc[1] += a.imag() * a.imag();
    acc[2] += b.real() * b.real();
    acc[3] += b.imag() * b.imag();
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t k = 2 * pairs; k < values.size(); ++k) {
    total += values[k].real() * values[k].real() + values[k].imag() * values[k].imag();
  }
  return total;
}

double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights) {
  if (values.size() != weights.size()) throw DimensionMismatch("weighted_sum_abs2: length mismatch");
  std::array<double, 4> acc{};
  const std::size_t pairs = values.size() / 2;
  for (std::size_t m = 0; m < pairs; ++m) {
    const Complex a = values[2 * m], b = values[2 * m + 1];
    const double wa = weights[2 * m], wb = weights[2 * m + 1];
    acc[0] += (a.real() * a.real()) * wa;
    acc[1] += (a.imag() * a.imag()) * wa;
    acc[2] += (b.real() * b.real()) * wb;
    acc[3] += (b.imag() * b.imag()) * wb;
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t k = 2 * pairs; k < values.size(); ++k) {
    total += (values[k].real() * values[k].real() + values[k].imag() * values[k].imag()) * weights[k];
  }
  return total;
}

void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out) {
  if (xs.size() != out.size()) throw DimensionMismatch("horner_real: length mismatch");
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      re = re * xs[k] + coeffs[j].real();
      im = im * xs[k] + coeffs[j].imag();
    }
    out[k] = Complex{re, im};
  }
}

}  // namespace iwqm::kernels::scalar
