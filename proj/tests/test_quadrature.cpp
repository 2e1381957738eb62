#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "iwqm/error.hpp"
#include "iwqm/quadrature.hpp"

using namespace iwqm;

TEST_CASE("small Gauss-Hermite rules have their textbook values", "[quadrature]") {
  const double sp = std::sqrt(kPi);
  const auto r1 = gauss_hermite(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == Catch::Approx(sp).epsilon(1e-15));

  const auto r2 = gauss_hermite(2);
  CHECK(r2.nodes[1] == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r2.nodes[0] == -r2.nodes[1]);
  CHECK(r2.weights[0] == Catch::Approx(sp / 2.0).epsilon(1e-15));

  const auto r3 = gauss_hermite(3);
  CHECK(r3.nodes[1] == 0.0);
  CHECK(r3.nodes[2] == Catch::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(r3.weights[1] == Catch::Approx(2.0 * sp / 3.0).epsilon(1e-15));
  CHECK(r3.weights[2] == Catch::Approx(sp / 6.0).epsilon(1e-15));
}

TEST_CASE("Gauss-Hermite rules integrate even moments exactly", "[quadrature]") {
  for (int n : {8, 32, 64, 100}) {
    const auto rule = gauss_hermite(n);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      CHECK(rule.nodes[k] == -rule.nodes[rule.nodes.size() - 1 - k]);
      CHECK(rule.weights[k] > 0.0);
    }
    for (int k = 0; k <= std::min(n - 1, 20); ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) sum += rule.weights[j] * std::pow(rule.nodes[j], 2 * k);
      // int s^{2k} e^{-s^2} ds = Gamma(k + 1/2)
      CHECK(sum == Catch::Approx(std::tgamma(k + 0.5)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Fresnel Gaussian by contour rotation", "[quadrature]") {
  // int cos(x^2) = int sin(x^2) = sqrt(pi/2), so int exp(-i x^2) = sqrt(pi/2)(1 - i).
  const Complex fresnel = std::sqrt(kPi / 2.0) * Complex{1.0, -1.0};
  CHECK(std::abs(fresnel_gaussian() - fresnel) <= 1e-15);
  const ContourQuadrature rule(32);
  CHECK(std::abs(rule.integrate(ComplexPolynomial::constant(1.0)) - fresnel) <= 1e-13);
  CHECK(rule.exact_degree() == 63);
}

TEST_CASE("moments of the imaginary Gaussian", "[quadrature]") {
  // int x^2 exp(-i x^2) dx = (sqrt(pi)/2) e^{-3 i pi/4}
  CHECK(std::abs(moment(2) - std::sqrt(kPi) / 2.0 * std::polar(1.0, -3.0 * kPi / 4.0)) <= 1e-15);
  CHECK(moment(1) == Complex{});
  CHECK(moment(7) == Complex{});
  // Ratio recurrence m_{2k+2} = m_{2k} (2k+1) / (2i)
  for (int k = 0; k < 10; ++k) {
    const Complex ratio = moment(2 * k + 2) / moment(2 * k);
    CHECK(std::abs(ratio - Complex{0.0, -(2.0 * k + 1.0) / 2.0}) <= 1e-13 * (2.0 * k + 1.0));
  }
  CHECK_THROWS_AS(moment(-1), InvalidArgument);
}

TEST_CASE("quadrature agrees with the moment series on random polynomials", "[quadrature]") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> d;
  const ContourQuadrature rule(40);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> c(1 + trial * 3 % 60);
    for (auto& z : c) z = {d(rng), d(rng)};
    const ComplexPolynomial p(c);
    const Complex q = rule.integrate(p);
    const Complex m = integrate_by_moments(p);
    CHECK(std::abs(q - m) <= 1e-12 * moment_scale(p));
  }
}

TEST_CASE("quadrature refuses polynomials beyond its exact degree", "[quadrature][errors]") {
  const ContourQuadrature rule(4);
  CHECK_NOTHROW(rule.integrate(ComplexPolynomial::monomial(7)));
  CHECK_THROWS_AS(rule.integrate(ComplexPolynomial::monomial(8)), PrecisionError);
  CHECK_THROWS_AS(gauss_hermite(0), InvalidArgument);
}

TEST_CASE("Gram matrix of dual eigenfunctions is the identity", "[quadrature][gram]") {
  const ContourQuadrature rule(64);
  const Matrix g = gram_matrix(12, rule);
  CHECK(g.rows() == 13);
  CHECK(identity_defect(g) <= 1e-8);
  CHECK((g - gram_matrix_by_moments(12)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(pairing_integral(eigenfunction(FockSet::bra, 3), eigenfunction(FockSet::ket, 3), rule) - 1.0) <=
        1e-12);
}

TEST_CASE("the (-i)^n bra phase gives an alternating Gram diagonal", "[quadrature][gram]") {
  const Matrix g = gram_matrix(12, ContourQuadrature(64), BraPhase::minus_i);
  for (int n = 0; n <= 12; ++n) {
    CHECK(std::abs(g(n, n) - (n % 2 == 0 ? 1.0 : -1.0)) <= 1e-8);
  }
  CHECK(identity_defect(g) > 1.0);
}

TEST_CASE("Gram and pairing preconditions", "[quadrature][errors]") {
  const ContourQuadrature rule(16);
  CHECK_THROWS_AS(gram_matrix(12, rule), PrecisionError);
  CHECK_NOTHROW(gram_matrix(8, rule));
  const auto ket = eigenfunction(FockSet::ket, 1);
  CHECK_THROWS_AS(pairing_integral(ket, ket, rule), ContractViolation);
  CHECK_THROWS_AS(pairing_integral_by_moments(eigenfunction(FockSet::bra, 0), eigenfunction(FockSet::bra, 0)),
                  ContractViolation);
}

TEST_CASE("same-set densities are not normalizable", "[quadrature][nonlocal]") {
  const double density = 1.0 / std::sqrt(kPi);
  double previous = 0.0;
  for (double half : {5.0, 10.0, 20.0, 40.0}) {
    const double v = truncated_self_norm(generating_function(FockSet::ket), half);
    CHECK(std::abs(v - 2.0 * half * density) <= 1e-10);
    CHECK(v > previous);
    previous = v;
  }
  // |psi_1|^2 = 2 x^2 / sqrt(pi), so the window integral is 4 L^3 / (3 sqrt(pi)).
  const double l = 3.0;
  CHECK(truncated_self_norm(eigenfunction(FockSet::ket, 1), l) ==
        Catch::Approx(4.0 * l * l * l / (3.0 * std::sqrt(kPi))).epsilon(1e-10));
}

TEST_CASE("adaptive Simpson", "[quadrature]") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12) ==
        Catch::Approx(2.0).epsilon(1e-11));
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return x; }, 0.0, 1.0, 0.0), InvalidArgument);
}
