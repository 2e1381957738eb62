#include "iwqm/coherent.hpp"

#include <cmath>
#include <string>

#include "iwqm/error.hpp"

namespace iwqm {

std::string_view to_string(BraCoherentConvention c) {
  return c == BraCoherentConvention::i_alpha ? "i_alpha" : "minus_i_alpha";
}

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::x:
      return "x";
    case Observable::p:
      return "p";
    case Observable::x2:
      return "x2";
    case Observable::p2:
      return "p2";
  }
  return "?";
}

double tail_bound(Complex alpha, int dim) {
  const double r = std::abs(alpha);
  if (r == 0.0) return 0.0;
  return std::exp(dim * std::log(r) - 0.5 * std::lgamma(dim + 1.0));
}

double eigen_residual_bound(Complex alpha, int dim) {
  const double r = std::abs(alpha);
  if (r == 0.0) return 0.0;
  return std::exp(dim * std::log(r) - 0.5 * std::lgamma(static_cast<double>(dim)));
}

CoherentState build_coherent(FockSet set, Complex alpha, int dim, const CoherentOptions& options) {
  if (dim < 2) throw InvalidDimension("coherent state needs dim >= 2");
  const double bound = tail_bound(alpha, dim);
  const bool warn = bound > options.tail_budget;
  if (warn && options.strict) {
    throw TruncationError("coherent tail bound " + std::to_string(bound) + " exceeds budget " +
                          std::to_string(options.tail_budget) + " at dim " + std::to_string(dim));
  }
  const double r2 = std::norm(alpha);
  Complex ratio = alpha;
  Complex c0 = std::polar(1.0, 0.5 * r2);
  if (set == FockSet::bra) {
    ratio = (options.bra_convention == BraCoherentConvention::i_alpha ? kI : -kI) * alpha;
    c0 = std::polar(1.0, -0.5 * r2);
  }
  Vector coeffs(dim);
  coeffs(0) = c0;
  for (int n = 1; n < dim; ++n) coeffs(n) = coeffs(n - 1) * ratio / std::sqrt(static_cast<double>(n));
  return {set, alpha, dim, std::move(coeffs), bound, warn, options.bra_convention};
}

double eigen_residual(const CoherentState& state, BraPhase bra_frame) {
  const auto lower = state.set == FockSet::ket ? build_lowering(state.dim)
                                               : build_bra_lowering(state.dim, bra_frame);
  return (lower.apply(state.coeffs) - state.alpha * state.coeffs).norm();
}

Complex coherent_pairing(Complex alpha, int dim, const CoherentOptions& options) {
  const auto bra = build_coherent(FockSet::bra, alpha, dim, options);
  const auto ket = build_coherent(FockSet::ket, alpha, dim, options);
  return dual_pairing(bra.as_dual(), ket.as_dual());
}

namespace {

TruncatedOperator observable_matrix(Observable o, int dim) {
  switch (o) {
    case Observable::x:
      return build_position(dim);
    case Observable::p:
      return build_momentum(dim);
    case Observable::x2: {
      const auto x = build_position(dim);
      return x * x;
    }
    case Observable::p2: {
      const auto p = build_momentum(dim);
      return p * p;
    }
  }
  throw InvalidArgument("unknown observable");
}

}  // namespace

Complex expectation(Observable o, Complex alpha, int dim, const CoherentOptions& options) {
  const auto bra = build_coherent(FockSet::bra, alpha, dim, options);
  const auto ket = build_coherent(FockSet::ket, alpha, dim, options);
  return dual_expectation(bra.as_dual(), observable_matrix(o, dim), ket.as_dual());
}

Complex closed_form_expectation(Observable o, Complex alpha) {
  const Complex ac = std::conj(alpha);
  const Complex root = std::sqrt(Complex{0.0, 2.0});
  const Complex two_i{0.0, 2.0};
  const double r2 = std::norm(alpha);
  switch (o) {
    case Observable::x:
      return (alpha - kI * ac) / root;
    case Observable::p:
      return (alpha + kI * ac) / root;
    case Observable::x2:
      return (alpha * alpha - two_i * r2 + 1.0 - ac * ac) / two_i;
    case Observable::p2:
      return (alpha * alpha + two_i * r2 - 1.0 - ac * ac) / two_i;
  }
  throw InvalidArgument("unknown observable");
}

UncertaintyReport uncertainty_product(Complex alpha, int dim, const CoherentOptions& options) {
  const auto bra = build_coherent(FockSet::bra, alpha, dim, options).as_dual();
  const auto ket = build_coherent(FockSet::ket, alpha, dim, options).as_dual();
  const auto x = build_position(dim);
  const auto p = build_momentum(dim);
  const Complex ex = dual_expectation(bra, x, ket);
  const Complex ep = dual_expectation(bra, p, ket);
  const Complex ex2 = dual_expectation(bra, x * x, ket);
  const Complex ep2 = dual_expectation(bra, p * p, ket);

  UncertaintyReport r;
  r.dx2 = ex2 - ex * ex;
  r.dp2 = ep2 - ep * ep;
  r.dx = std::sqrt(r.dx2);
  r.dp = std::sqrt(r.dp2);
  const Complex prod = r.dx * r.dp;
  r.product = prod.real();
  r.product_imag = prod.imag();
  return r;
}

}  // namespace iwqm
