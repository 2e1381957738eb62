#pragma once

// Coordinate-space eigenfunctions of the inverted well.
//
// Every function here has the shape  prefactor * P(x) * exp(s * i x^2 / 2)
// with s = -1 for kets and s = +1 for bras. With p = -i d/dx the ladder
// operators become
//
//   a- = sqrt(i/2) (x - i d/dx)   (ket lowering, bra raising)
//   a+ = sqrt(i/2) (x + i d/dx)   (ket raising, bra lowering)
//
// and map that shape onto itself, so they act exactly on the polynomial.

#include <span>
#include <vector>

#include "iwqm/fock.hpp"
#include "iwqm/polynomial.hpp"
#include "iwqm/types.hpp"

namespace iwqm {

/// prefactor * poly(x) * exp(gauss_sign * i x^2 / 2)
struct GaussianPhaseFunction {
  Complex prefactor{1.0};
  ComplexPolynomial poly;
  int gauss_sign = -1;

  Complex operator()(double x) const;
};

/// The n-th ket (psi_n^r) or bra (psi_n^l) eigenfunction.
///
/// `phase` is the bra ladder phase used to build bra states; the default
/// plus_i makes psi_n^l the complex conjugate of psi_n^r on the real line and
/// the bra/ket Gram matrix the identity. minus_i reproduces the alternative
/// (-i)^n normalization, whose Gram diagonal is (-1)^n.
struct Eigenfunction {
  FockSet set = FockSet::ket;
  int n = 0;
  ComplexPolynomial poly;
  int gauss_sign = -1;
  Complex prefactor{1.0};
  BraPhase phase = BraPhase::plus_i;

  GaussianPhaseFunction function() const { return {prefactor, poly, gauss_sign}; }
};

/// Ground state: (i/pi)^(1/4) exp(-i x^2/2) for kets, (-i/pi)^(1/4) exp(+i x^2/2) for bras.
Eigenfunction generating_function(FockSet set, BraPhase phase = BraPhase::plus_i);

/// One application of the family's raising operator, renormalized to level n+1.
Eigenfunction raise_once(const Eigenfunction& f);

Eigenfunction eigenfunction(FockSet set, int n, BraPhase phase = BraPhase::plus_i);

Complex evaluate(const Eigenfunction& f, double x);

/// Batched evaluation through the SIMD polynomial kernel.
std::vector<Complex> evaluate(const Eigenfunction& f, std::span<const double> xs);

// Differential operators ------------------------------------------------------

/// sqrt(i/2) (x - i d/dx) f
GaussianPhaseFunction apply_a_minus(const GaussianPhaseFunction& f);
/// sqrt(i/2) (x + i d/dx) f
GaussianPhaseFunction apply_a_plus(const GaussianPhaseFunction& f);

/// Lowering operator of the family: a- for kets, a+ for bras.
GaussianPhaseFunction apply_lowering(FockSet set, const GaussianPhaseFunction& f);
/// Raising operator of the family: a+ for kets, a- for bras.
GaussianPhaseFunction apply_raising(FockSet set, const GaussianPhaseFunction& f);

}  // namespace iwqm
