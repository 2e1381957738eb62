#include "iwqm/eigenfunctions.hpp"

#include <cmath>

#include "iwqm/error.hpp"
#include "iwqm/kernels.hpp"

namespace iwqm {

namespace {

Complex gaussian_phase(int gauss_sign, double x) {
  return std::polar(1.0, 0.5 * gauss_sign * x * x);
}

// (x + c d/dx)(P e^{s i x^2/2}) = (x P + c (P' + s i x P)) e^{s i x^2/2}
GaussianPhaseFunction apply_x_plus_derivative(const GaussianPhaseFunction& f, Complex c) {
  const auto xp = f.poly.times_x();
  const Complex s_i{0.0, static_cast<double>(f.gauss_sign)};
  auto poly = xp + c * (f.poly.derivative() + s_i * xp);
  return {f.prefactor * sqrt_i_half(), std::move(poly), f.gauss_sign};
}

}  // namespace

Complex GaussianPhaseFunction::operator()(double x) const {
  return prefactor * poly(Complex{x, 0.0}) * gaussian_phase(gauss_sign, x);
}

Eigenfunction generating_function(FockSet set, BraPhase phase) {
  Eigenfunction f;
  f.set = set;
  f.n = 0;
  f.poly = ComplexPolynomial::constant(1.0);
  f.phase = phase;
  if (set == FockSet::ket) {
    f.gauss_sign = -1;
    f.prefactor = std::pow(Complex{0.0, 1.0 / kPi}, 0.25);
  } else {
    f.gauss_sign = +1;
    f.prefactor = std::pow(Complex{0.0, -1.0 / kPi}, 0.25);
  }
  return f;
}

Eigenfunction raise_once(const Eigenfunction& f) {
  Eigenfunction next = f;
  next.n = f.n + 1;
  const auto two_x = Complex{2.0} * f.poly.times_x();
  const double norm = std::sqrt(static_cast<double>(next.n));
  if (f.set == FockSet::ket) {
    next.poly = two_x + kI * f.poly.derivative();
    next.prefactor = f.prefactor * sqrt_i_half() / norm;
  } else {
    next.poly = two_x - kI * f.poly.derivative();
    next.prefactor = f.prefactor * sqrt_i_half() / (phase_value(f.phase) * norm);
  }
  return next;
}

Eigenfunction eigenfunction(FockSet set, int n, BraPhase phase) {
  if (n < 0) throw InvalidArgument("eigenfunction index must be nonnegative");
  auto f = generating_function(set, phase);
  for (int k = 0; k < n; ++k) f = raise_once(f);
  return f;
}

Complex evaluate(const Eigenfunction& f, double x) { return f.function()(x); }

std::vector<Complex> evaluate(const Eigenfunction& f, std::span<const double> xs) {
  std::vector<Complex> out(xs.size());
  kernels::horner_real(f.poly.coeffs(), xs, out);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    out[k] = f.prefactor * out[k] * gaussian_phase(f.gauss_sign, xs[k]);
  }
  return out;
}

GaussianPhaseFunction apply_a_minus(const GaussianPhaseFunction& f) {
  return apply_x_plus_derivative(f, Complex{0.0, -1.0});
}

GaussianPhaseFunction apply_a_plus(const GaussianPhaseFunction& f) {
  return apply_x_plus_derivative(f, Complex{0.0, 1.0});
}

GaussianPhaseFunction apply_lowering(FockSet set, const GaussianPhaseFunction& f) {
  return set == FockSet::ket ? apply_a_minus(f) : apply_a_plus(f);
}

GaussianPhaseFunction apply_raising(FockSet set, const GaussianPhaseFunction& f) {
  return set == FockSet::ket ? apply_a_plus(f) : apply_a_minus(f);
}

}  // namespace iwqm
