#pragma once

// Dual coherent states of the imaginary-frequency boson.
//
//   ket:  c_n = e^{ i|alpha|^2/2} alpha^n / sqrt(n!)          (a- |alpha>_r = alpha |alpha>_r)
//   bra:  c_n = e^{-i|alpha|^2/2} (beta alpha)^n / sqrt(n!)   (a+ |alpha>_l = alpha |alpha>_l)
//
// with beta = i or -i depending on BraCoherentConvention. Under the bra
// ladder phase -i only beta = i solves the eigenvalue equation, so it is the
// default.

#include <string_view>

#include "iwqm/fock.hpp"
#include "iwqm/types.hpp"

namespace iwqm {

enum class BraCoherentConvention { i_alpha, minus_i_alpha };

std::string_view to_string(BraCoherentConvention c);

struct CoherentOptions {
  /// Throw TruncationError when the tail bound exceeds tail_budget.
  bool strict = false;
  double tail_budget = 1e-12;
  BraCoherentConvention bra_convention = BraCoherentConvention::i_alpha;
  /// Ladder phase of the bra frame in which a+ lowers bra states.
  BraPhase bra_frame = BraPhase::minus_i;
};

struct CoherentState {
  FockSet set;
  Complex alpha;
  int dim;
  Vector coeffs;
  /// |alpha|^dim / sqrt(dim!)
  double tail_bound;
  bool truncation_warning;
  BraCoherentConvention convention;

  DualVector as_dual() const { return {set, coeffs}; }
};

/// |alpha|^dim / sqrt(dim!), evaluated in log space.
double tail_bound(Complex alpha, int dim);

/// Norm of the residual left by truncation: |alpha|^dim / sqrt((dim-1)!).
double eigen_residual_bound(Complex alpha, int dim);

CoherentState build_coherent(FockSet set, Complex alpha, int dim, const CoherentOptions& options = {});

/// || (L - alpha) c || where L is a- on kets or a+ (bra frame) on bras.
double eigen_residual(const CoherentState& state, BraPhase bra_frame = BraPhase::minus_i);

/// l<alpha|alpha>_r
Complex coherent_pairing(Complex alpha, int dim, const CoherentOptions& options = {});

enum class Observable { x, p, x2, p2 };

std::string_view to_string(Observable o);

/// l<alpha| O |alpha>_r contracted in the truncated Fock space.
Complex expectation(Observable o, Complex alpha, int dim, const CoherentOptions& options = {});

/// Closed forms: <x> = (alpha - i alpha*)/sqrt(2i), <p> = (alpha + i alpha*)/sqrt(2i),
/// <x^2> = (alpha^2 - 2i|alpha|^2 + 1 - alpha*^2)/(2i),
/// <p^2> = (alpha^2 + 2i|alpha|^2 - 1 - alpha*^2)/(2i).
Complex closed_form_expectation(Observable o, Complex alpha);

struct UncertaintyReport {
  Complex dx2;
  Complex dp2;
  /// Principal square roots of the variances.
  Complex dx;
  Complex dp;
  /// Real part of dx * dp.
  double product;
  /// Imaginary part of dx * dp; zero when the relation is minimal.
  double product_imag;
};

UncertaintyReport uncertainty_product(Complex alpha, int dim, const CoherentOptions& options = {});

}  // namespace iwqm
