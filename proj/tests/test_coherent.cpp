#include <catch_amalgamated.hpp>

#include <cmath>

#include "iwqm/coherent.hpp"
#include "iwqm/error.hpp"
#include "iwqm/suites.hpp"

using namespace iwqm;

TEST_CASE("coherent coefficients follow their recurrences", "[coherent]") {
  const Complex a{0.8, -0.3};
  const auto ket = build_coherent(FockSet::ket, a, 20);
  const auto bra = build_coherent(FockSet::bra, a, 20);
  CHECK(std::abs(ket.coeffs(0) - std::polar(1.0, 0.5 * std::norm(a))) <= 1e-15);
  CHECK(std::abs(bra.coeffs(0) - std::polar(1.0, -0.5 * std::norm(a))) <= 1e-15);
  for (int n = 1; n < 20; ++n) {
    const double r = std::sqrt(static_cast<double>(n));
    CHECK(std::abs(ket.coeffs(n) - a / r * ket.coeffs(n - 1)) <= 1e-15);
    CHECK(std::abs(bra.coeffs(n) - kI * a / r * bra.coeffs(n - 1)) <= 1e-15);
  }
  CoherentOptions other;
  other.bra_convention = BraCoherentConvention::minus_i_alpha;
  const auto alt = build_coherent(FockSet::bra, a, 20, other);
  CHECK(std::abs(alt.coeffs(1) + kI * a * alt.coeffs(0)) <= 1e-15);
}

TEST_CASE("tail bound and truncation policy", "[coherent]") {
  CHECK(tail_bound(1.0, 64) == Catch::Approx(1.0 / std::sqrt(std::tgamma(65.0))).epsilon(1e-12));
  CHECK(tail_bound(0.0, 8) == 0.0);
  const auto loose = build_coherent(FockSet::ket, 2.0, 8);
  CHECK(loose.truncation_warning);
  CHECK_FALSE(build_coherent(FockSet::ket, 1.0, 64).truncation_warning);
  CoherentOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(build_coherent(FockSet::ket, 2.0, 8, strict), TruncationError);
  CHECK_NOTHROW(build_coherent(FockSet::ket, 1.0, 64, strict));
  CHECK_THROWS_AS(build_coherent(FockSet::ket, 1.0, 1), InvalidDimension);
}

TEST_CASE("eigen residual is the truncated last coefficient", "[coherent]") {
  // |(a- - alpha) c| = |alpha| |c_{dim-1}| = |alpha|^dim / sqrt((dim-1)!)
  for (int dim : {4, 8, 16}) {
    const Complex a{1.2, 0.9};
    const auto ket = build_coherent(FockSet::ket, a, dim);
    CHECK(eigen_residual(ket) == Catch::Approx(eigen_residual_bound(a, dim)).epsilon(1e-12));
    const auto bra = build_coherent(FockSet::bra, a, dim);
    CHECK(eigen_residual(bra, BraPhase::minus_i) == Catch::Approx(eigen_residual_bound(a, dim)).epsilon(1e-12));
  }
  CHECK(eigen_residual(build_coherent(FockSet::ket, 1.0, 64)) <= 1e-10);
}

TEST_CASE("coherent suite identities over the alpha grid", "[coherent]") {
  const Complex minus_half_i{0.0, -0.5};
  for (Complex a : coherent_alpha_grid()) {
    INFO("alpha = " << a);
    CHECK(std::abs(a) <= 2.0);
    CHECK(std::abs(coherent_pairing(a, 64) - 1.0) <= 1e-10);
    for (Observable o : {Observable::x, Observable::p, Observable::x2, Observable::p2}) {
      CHECK(std::abs(expectation(o, a, 64) - closed_form_expectation(o, a)) <= 1e-10);
    }
    const auto u = uncertainty_product(a, 64);
    CHECK(std::abs(u.dx2 - minus_half_i) <= 1e-10);
    CHECK(std::abs(u.dp2 + minus_half_i) <= 1e-10);
    CHECK(std::abs(u.product - 0.5) <= 1e-10);
    CHECK(std::abs(u.product_imag) <= 1e-10);
  }
}

TEST_CASE("closed forms at the vacuum", "[coherent]") {
  CHECK(closed_form_expectation(Observable::x, 0.0) == Complex{});
  CHECK(std::abs(closed_form_expectation(Observable::x2, 0.0) - Complex{0.0, -0.5}) <= 1e-16);
  CHECK(std::abs(closed_form_expectation(Observable::p2, 0.0) - Complex{0.0, 0.5}) <= 1e-16);
  // For real alpha, <x> = -i alpha and <p> = alpha.
  CHECK(std::abs(closed_form_expectation(Observable::x, 0.7) - Complex{0.0, -0.7}) <= 1e-15);
  CHECK(std::abs(closed_form_expectation(Observable::p, 0.7) - 0.7) <= 1e-15);
}

TEST_CASE("exactly one bra convention passes", "[coherent][conventions]") {
  auto passes = [](BraCoherentConvention c) {
    CoherentOptions opts;
    opts.bra_convention = c;
    for (Complex a : coherent_alpha_grid()) {
      if (std::abs(coherent_pairing(a, 64, opts) - 1.0) > 1e-10) return false;
      if (eigen_residual(build_coherent(FockSet::bra, a, 64, opts), opts.bra_frame) > 1e-12) return false;
    }
    return true;
  };
  CHECK(passes(BraCoherentConvention::i_alpha));
  CHECK_FALSE(passes(BraCoherentConvention::minus_i_alpha));
  CHECK(to_string(BraCoherentConvention::i_alpha) == "i_alpha");
}

TEST_CASE("ket-bra pairing order is enforced", "[coherent][errors]") {
  const auto ket = build_coherent(FockSet::ket, 0.5, 8).as_dual();
  CHECK_THROWS_AS(dual_pairing(ket, ket), ContractViolation);
}
