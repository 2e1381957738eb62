// Compiled with -mavx2 (no FMA, so products and sums round exactly as in
// the scalar reference).

#include <immintrin.h>

#include <array>
#include <cstddef>

#include "iwqm/error.hpp"
#include "iwqm/kernels.hpp"

namespace iwqm::kernels::avx2 {

namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

inline double reduce_lanes(__m256d acc) {
  alignas(32) std::array<double, 4> lanes;
  _mm256_store_pd(lanes.data(), acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

void multiply_inplace(std::span<Complex> values, std::span<const Complex> factors) {
  if (values.size() != factors.size()) throw DimensionMismatch("multiply_inplace: length mismatch");
  double* v = as_doubles(values.data());
  const double* f = as_doubles(factors.data());
  const std::size_t pairs = values.size() / 2;
  for (std::size_t m = 0; m < pairs; ++m) {
    const __m256d a = _mm256_loadu_pd(v + 4 * m);
    const __m256d b = _mm256_loadu_pd(f + 4 * m);
    const __m256d b_re = _mm256_movedup_pd(b);         // br0 br0 br1 br1
    const __m256d b_im = _mm256_permute_pd(b, 0xF);    // bi0 bi0 bi1 bi1
    const __m256d a_swapped = _mm256_permute_pd(a, 0x5);  // ai0 ar0 ai1 ar1
    const __m256d t1 = _mm256_mul_pd(a, b_re);
    const __m256d t2 = _mm256_mul_pd(a_swapped, b_im);
    _mm256_storeu_pd(v + 4 * m, _mm256_addsub_pd(t1, t2));
  }
  for (std::size_t k = 2 * pairs; k < values.size(); ++k) {
    const double ar = values[k].real(), ai = values[k].imag();
    const double br = factors[k].real(), bi = factors[k].imag();
    values[k] = Complex{ar * br - ai * bi, ai * br + ar * bi};
  }
}

double sum_abs2(std::span<const Complex> values) {
  const double* v = as_doubles(values.data());
  const std::size_t pairs = values.size() / 2;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t m = 0; m < pairs; ++m) {
    const __m256d a = _mm256_loadu_pd(v + 4 * m);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(a, a));
  }
  double total = reduce_lanes(acc);
  for (std::size_t k = 2 * pairs; k < values.size(); ++k) {
    total += values[k].real() * values[k].real() + values[k].imag() * values[k].imag();
  }
  return total;
}

double weighted_sum_abs2(std::span<const Complex> values, std::span<const double> weights) {
  if (values.size() != weights.size()) throw DimensionMismatch("weighted_sum_abs2: length mismatch");
  const double* v = as_doubles(values.data());
  const std::size_t pairs = values.size() / 2;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t m = 0; m < pairs; ++m) {
    const __m256d a = _mm256_loadu_pd(v + 4 * m);
    const __m128d w2 = _mm_loadu_pd(weights.data() + 2 * m);
    const __m256d w = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);  // wa wa wb wb
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(a, a), w));
  }
  double total = reduce_lanes(acc);
  for (std::size_t k = 2 * pairs; k < values.size(); ++k) {
    total += (values[k].real() * values[k].real() + values[k].imag() * values[k].imag()) * weights[k];
  }
  return total;
}

void horner_real(std::span<const Complex> coeffs, std::span<const double> xs,
                 std::span<Complex> out) {
  if (xs.size() != out.size()) throw DimensionMismatch("horner_real: length mismatch");
  const std::size_t quads = xs.size() / 4;
  for (std::size_t q = 0; q < quads; ++q) {
    const __m256d x = _mm256_loadu_pd(xs.data() + 4 * q);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      re = _mm256_add_pd(_mm256_mul_pd(re, x), _mm256_set1_pd(coeffs[j].real()));
      im = _mm256_add_pd(_mm256_mul_pd(im, x), _mm256_set1_pd(coeffs[j].imag()));
    }
    // Interleave (re0 re1 re2 re3), (im0 im1 im2 im3) into four complex values.
    const __m256d lo = _mm256_unpacklo_pd(re, im);  // re0 im0 re2 im2
    const __m256d hi = _mm256_unpackhi_pd(re, im);  // re1 im1 re3 im3
    double* o = as_doubles(out.data() + 4 * q);
    _mm256_storeu_pd(o, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(o + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
  }
  for (std::size_t k = 4 * quads; k < xs.size(); ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      re = re * xs[k] + coeffs[j].real();
      im = im * xs[k] + coeffs[j].imag();
    }
    out[k] = Complex{re, im};
  }
}

}  // namespace iwqm::kernels::avx2
