#pragma once

// Integrals of polynomial * exp(-i x^2) over the real line under the
// imaginary integration measure, where  int exp(-i x^2) dx = sqrt(pi/i).
//
// The contour x = e^{-i pi/4} s turns exp(-i x^2) into exp(-s^2), so a
// Gauss-Hermite rule in s integrates such polynomials exactly. The closed-form
// moments give a second, independent route.

#include <functional>
#include <span>
#include <vector>

#include "iwqm/eigenfunctions.hpp"
#include "iwqm/fock.hpp"
#include "iwqm/polynomial.hpp"

namespace iwqm {

struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, for weight function exp(-s^2)
};

/// Golub-Welsch eigenvalue solve, refined by Newton steps on the orthonormal
/// Hermite recurrence so that small outer weights keep full relative accuracy.
GaussHermiteRule gauss_hermite(int node_count);

class ContourQuadrature {
 public:
  explicit ContourQuadrature(int node_count);

  int node_count() const { return static_cast<int>(rule_.nodes.size()); }
  /// Highest polynomial degree integrated exactly: 2 * node_count - 1.
  int exact_degree() const { return 2 * node_count() - 1; }

  static Complex rotation() { return std::polar(1.0, -kPi / 4.0); }

  std::span<const double> hermite_nodes() const { return rule_.nodes; }
  std::span<const double> hermite_weights() const { return rule_.weights; }
  std::span<const Complex> nodes() const { return nodes_; }
  std::span<const Complex> weights() const { return weights_; }

  /// int p(x) exp(-i x^2) dx. Throws PrecisionError when deg p > exact_degree().
  Complex integrate(const ComplexPolynomial& p) const;

 private:
  GaussHermiteRule rule_;
  std::vector<Complex> nodes_;
  std::vector<Complex> weights_;
};

/// sqrt(pi/i) = sqrt(pi) e^{-i pi/4}.
Complex fresnel_gaussian();

/// int x^m exp(-i x^2) dx: zero for odd m, sqrt(pi/i) (2k-1)!! / (2i)^k for m = 2k.
Complex moment(int m);

/// sum_j c_j moment(j); the closed-form counterpart of ContourQuadrature::integrate.
Complex integrate_by_moments(const ComplexPolynomial& p);

/// sum_j |c_j| |moment(j)|: the magnitude scale for relative comparisons.
double moment_scale(const ComplexPolynomial& p);

/// Integrand conj(psi_bra) * psi_ket = prefactor * poly(x) * exp(-i x^2).
struct PairingIntegrand {
  Complex prefactor;
  ComplexPolynomial poly;
};

PairingIntegrand pairing_integrand(const Eigenfunction& bra, const Eigenfunction& ket);

/// int conj(psi_m^l(x)) psi_n^r(x) dx. Throws ContractViolation unless
/// called with a bra and a ket.
Complex pairing_integral(const Eigenfunction& bra, const Eigenfunction& ket,
                         const ContourQuadrature& rule);
Complex pairing_integral_by_moments(const Eigenfunction& bra, const Eigenfunction& ket);

/// (nmax+1)^2 bra/ket pairings. Requires rule.node_count() >= nmax + 8.
Matrix gram_matrix(int nmax, const ContourQuadrature& rule, BraPhase phase = BraPhase::plus_i);
Matrix gram_matrix_by_moments(int nmax, BraPhase phase = BraPhase::plus_i);

/// max |G - I| over all entries.
double identity_defect(const Matrix& g);

/// Adaptive composite Simpson on [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 48);

/// int_{-L}^{L} |psi(x)|^2 dx: the same-set density over a finite window.
double truncated_self_norm(const Eigenfunction& f, double half_width, double tol = 1e-10);

}  // namespace iwqm
