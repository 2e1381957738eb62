#include "iwqm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "iwqm/error.hpp"

namespace iwqm {

namespace {

struct OrthonormalHermite {
  double value;       // p_n(z)
  double derivative;  // p_n'(z)
};

// Orthonormal Hermite polynomials with respect to exp(-z^2).
OrthonormalHermite orthonormal_hermite(int n, double z) {
  double p1 = std::pow(kPi, -0.25);
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
  }
  return {p1, std::sqrt(2.0 * n) * p2};
}

}  // namespace

GaussHermiteRule gauss_hermite(int node_count) {
  if (node_count < 1) throw InvalidArgument("Gauss-Hermite rule needs at least one node");
  const int n = node_count;
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = std::sqrt(kPi);
    return rule;
  }

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw PrecisionError("Gauss-Hermite eigenvalue solve failed");

  for (int k = 0; k < n; ++k) {
    double z = solver.eigenvalues()(k);
    for (int iter = 0; iter < 20; ++iter) {
      const auto h = orthonormal_hermite(n, z);
      const double step = h.value / h.derivative;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    const auto h = orthonormal_hermite(n, z);
    rule.nodes[k] = z;
    rule.weights[k] = 2.0 / (h.derivative * h.derivative);
  }

  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rule.nodes[a] < rule.nodes[b]; });
  GaussHermiteRule sorted;
  sorted.nodes.resize(n);
  sorted.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    sorted.nodes[k] = rule.nodes[order[k]];
    sorted.weights[k] = rule.weights[order[k]];
  }

  // Exact +- pairs.
  for (int k = 0; k < n / 2; ++k) {
    const int m = n - 1 - k;
    const double node = 0.5 * (sorted.nodes[m] - sorted.nodes[k]);
    const double weight = 0.5 * (sorted.weights[m] + sorted.weights[k]);
    sorted.nodes[k] = -node;
    sorted.nodes[m] = node;
    sorted.weights[k] = weight;
    sorted.weights[m] = weight;
  }
  if (n % 2 == 1) sorted.nodes[n / 2] = 0.0;
  return sorted;
}

ContourQuadrature::ContourQuadrature(int node_count) : rule_(gauss_hermite(node_count)) {
  const Complex c = rotation();
  nodes_.reserve(rule_.nodes.size());
  weights_.reserve(rule_.nodes.size());
  for (std::size_t k = 0; k < rule_.nodes.size(); ++k) {
    nodes_.push_back(c * rule_.nodes[k]);
    weights_.push_back(c * rule_.weights[k]);
  }
}

Complex ContourQuadrature::integrate(const ComplexPolynomial& p) const {
  if (p.degree() > exact_degree()) {
    throw PrecisionError("polynomial degree " + std::to_string(p.degree()) +
                         " exceeds the exactness bound " + std::to_string(exact_degree()) + " of a " +
                         std::to_string(node_count()) + "-node rule");
  }
  const int n = node_count();
  // Mirror nodes are summed together so odd parts cancel exactly.
  Complex total{};
  for (int k = 0; k < n / 2; ++k) {
    const int m = n - 1 - k;
    total += weights_[m] * (p(nodes_[k]) + p(nodes_[m]));
  }
  if (n % 2 == 1) total += weights_[n / 2] * p(nodes_[n / 2]);
  return total;
}

Complex fresnel_gaussian() { return std::sqrt(Complex{kPi, 0.0} / kI); }

Complex moment(int m) {
  if (m < 0) throw InvalidArgument("moment order must be nonnegative");
  if (m % 2 == 1) return {};
  Complex value = fresnel_gaussian();
  const Complex two_i{0.0, 2.0};
  for (int j = 1; j <= m / 2; ++j) value *= static_cast<double>(2 * j - 1) / two_i;
  return value;
}

Complex integrate_by_moments(const ComplexPolynomial& p) {
  Complex total{};
  for (int j = 0; j <= p.degree(); ++j) total += p.coeff(j) * moment(j);
  return total;
}

double moment_scale(const ComplexPolynomial& p) {
  double total = 0.0;
  for (int j = 0; j <= p.degree(); ++j) total += std::abs(p.coeff(j)) * std::abs(moment(j));
  return total;
}

PairingIntegrand pairing_integrand(const Eigenfunction& bra, const Eigenfunction& ket) {
  if (bra.set != FockSet::bra || ket.set != FockSet::ket) {
    throw ContractViolation("coordinate pairing is defined only between a bra and a ket");
  }
  // conj(e^{+i x^2/2}) e^{-i x^2/2} = e^{-i x^2}
  return {std::conj(bra.prefactor) * ket.prefactor, bra.poly.conjugated() * ket.poly};
}

Complex pairing_integral(const Eigenfunction& bra, const Eigenfunction& ket,
                         const ContourQuadrature& rule) {
  const auto integrand = pairing_integrand(bra, ket);
  return integrand.prefactor * rule.integrate(integrand.poly);
}

Complex pairing_integral_by_moments(const Eigenfunction& bra, const Eigenfunction& ket) {
  const auto integrand = pairing_integrand(bra, ket);
  return integrand.prefactor * integrate_by_moments(integrand.poly);
}

namespace {

template <class Pairing>
Matrix build_gram(int nmax, BraPhase phase, Pairing&& pairing) {
  if (nmax < 0) throw InvalidArgument("gram_matrix: nmax must be nonnegative");
  std::vector<Eigenfunction> bras, kets;
  bras.push_back(generating_function(FockSet::bra, phase));
  kets.push_back(generating_function(FockSet::ket, phase));
  for (int n = 1; n <= nmax; ++n) {
    bras.push_back(raise_once(bras.back()));
    kets.push_back(raise_once(kets.back()));
  }
  Matrix g(nmax + 1, nmax + 1);
  for (int m = 0; m <= nmax; ++m) {
    for (int n = 0; n <= nmax; ++n) g(m, n) = pairing(bras[m], kets[n]);
  }
  return g;
}

}  // namespace

Matrix gram_matrix(int nmax, const ContourQuadrature& rule, BraPhase phase) {
  if (rule.node_count() < nmax + 8) {
    throw PrecisionError("gram_matrix(" + std::to_string(nmax) + ") needs at least " +
                         std::to_string(nmax + 8) + " quadrature nodes, got " +
                         std::to_string(rule.node_count()));
  }
  return build_gram(nmax, phase, [&](const Eigenfunction& b, const Eigenfunction& k) {
    return pairing_integral(b, k, rule);
  });
}

Matrix gram_matrix_by_moments(int nmax, BraPhase phase) {
  return build_gram(nmax, phase, [](const Eigenfunction& b, const Eigenfunction& k) {
    return pairing_integral_by_moments(b, k);
  });
}

double identity_defect(const Matrix& g) {
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (!(tol > 0.0)) throw InvalidArgument("adaptive_simpson: tolerance must be positive");
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double truncated_self_norm(const Eigenfunction& f, double half_width, double tol) {
  if (!(half_width > 0.0)) throw InvalidArgument("truncated_self_norm: half width must be positive");
  return adaptive_simpson([&](double x) { return std::norm(evaluate(f, x)); }, -half_width,
                          half_width, tol);
}

}  // namespace iwqm
