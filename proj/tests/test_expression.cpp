#include <catch_amalgamated.hpp>

#include "iwqm/error.hpp"
#include "iwqm/expression.hpp"
#include "iwqm/expression_parser.hpp"

using namespace iwqm;

namespace {

using E = OperatorExpression;

double distance(const E& a, const E& b, int dim = 12, int margin = 0) {
  const auto x = evaluate(a, dim);
  const auto y = evaluate(b, dim);
  if (margin == 0) return max_abs(x - y);
  return leading_block_residual(x, y, margin);
}

}  // namespace

TEST_CASE("named expressions agree with the matrix builders", "[expression]") {
  const int dim = 10;
  CHECK(max_abs(evaluate(E::lowering(), dim) - build_lowering(dim)) == 0.0);
  CHECK(max_abs(evaluate(E::raising(), dim) - build_raising(dim)) == 0.0);
  CHECK(max_abs(evaluate(named::number(), dim) - build_number(dim)) == 0.0);
  CHECK(max_abs(evaluate(named::hamiltonian(1.5), dim) - build_hamiltonian(dim, 1.5)) <= 1e-15);
  CHECK(max_abs(evaluate(named::position(), dim) - build_position(dim)) <= 1e-15);
  CHECK(max_abs(evaluate(named::momentum(), dim) - build_momentum(dim)) <= 1e-15);
  const auto s = build_su11(dim);
  CHECK(max_abs(evaluate(named::su11_z(), dim) - s.sz) <= 1e-15);
  CHECK(max_abs(evaluate(named::su11_x(), dim) - s.sx) <= 1e-15);
  CHECK(max_abs(evaluate(named::su11_y(), dim) - s.sy) <= 1e-15);
}

TEST_CASE("physical adjoint on generators", "[expression][adjoint]") {
  const auto am = E::lowering();
  const auto ap = E::raising();
  CHECK(distance(physical_adjoint(am, AdjointSign::minus), Complex{0.0, -1.0} * am) == 0.0);
  CHECK(distance(physical_adjoint(ap, AdjointSign::minus), Complex{0.0, -1.0} * ap) == 0.0);
  CHECK(distance(physical_adjoint(am, AdjointSign::plus), Complex{0.0, 1.0} * am) == 0.0);
  CHECK(distance(physical_adjoint(E::identity(), AdjointSign::plus), E::identity()) == 0.0);
}

TEST_CASE("physical adjoint is an anti-linear, order-reversing involution", "[expression][adjoint]") {
  const auto am = E::lowering();
  const auto ap = E::raising();
  const E x = Complex{2.0, 3.0} * (am * ap * ap) + Complex{0.0, -1.0} * (ap * am) + E::identity();
  for (AdjointSign s : {AdjointSign::minus, AdjointSign::plus}) {
    CHECK(distance(physical_adjoint(physical_adjoint(x, s), s), x) <= 1e-14);
    // (c A B)^dagger = conj(c) B^dagger A^dagger
    const E lhs = physical_adjoint(Complex{1.0, 2.0} * (am * ap), s);
    const E rhs = Complex{1.0, -2.0} * (physical_adjoint(ap, s) * physical_adjoint(am, s));
    CHECK(distance(lhs, rhs) <= 1e-15);
  }
}

TEST_CASE("adjoint identities hold for both signs", "[expression][adjoint]") {
  const auto n = named::number();
  const auto id = E::identity();
  for (AdjointSign s : {AdjointSign::minus, AdjointSign::plus}) {
    CHECK(distance(physical_adjoint(n, s), -(n + id), 16, 1) <= 1e-12);
    CHECK(distance(physical_adjoint(named::hamiltonian(1.0), s), named::hamiltonian(1.0), 16, 1) <= 1e-12);
    CHECK(distance(physical_adjoint(named::su11_z(), s), -named::su11_z(), 16, 1) <= 1e-12);
  }
}

TEST_CASE("generator degree and commutator", "[expression]") {
  const auto am = E::lowering();
  const auto ap = E::raising();
  CHECK(generator_degree(E::identity()) == 0);
  CHECK(generator_degree(am) == 1);
  CHECK(generator_degree(am * ap * am) == 3);
  CHECK(generator_degree(am + ap * ap) == 2);
  CHECK(generator_degree(named::su11_plus()) == 2);
  CHECK(distance(commutator(am, ap), E::identity(), 12, 1) <= 1e-14);
}

TEST_CASE("parser builds the expected trees", "[parser]") {
  CHECK(distance(parse_expression("a- + a+ * a-"), E::lowering() + E::raising() * E::lowering()) == 0.0);
  CHECK(distance(parse_expression("(a- + a+) * a-"), (E::lowering() + E::raising()) * E::lowering()) == 0.0);
  CHECK(distance(parse_expression("-n"), -named::number()) == 0.0);
  CHECK(distance(parse_expression("2i*I"), Complex{0.0, 2.0} * E::identity()) == 0.0);
  CHECK(distance(parse_expression("i"), Complex{0.0, 1.0} * E::identity()) == 0.0);
  CHECK(distance(parse_expression("0.5*a-*a+"), Complex{0.5} * (E::lowering() * E::raising())) == 0.0);
  CHECK(distance(parse_expression("a- * 3"), Complex{3.0} * E::lowering()) == 0.0);
  CHECK(distance(parse_expression("H"), named::hamiltonian(1.0)) == 0.0);
  ParseOptions opts;
  opts.omega = 2.0;
  CHECK(distance(parse_expression("H", opts), named::hamiltonian(2.0)) == 0.0);
}

TEST_CASE("op-check identities", "[parser]") {
  const char* identities[] = {"comm(a-, a+) == I",     "adj(H) == H",           "comm(S+, S-) == -2*Sz",
                              "adj(n) == -(n+I)",      "comm(Sz, S+) == S+",    "comm(Sz, S-) == -S-",
                              "comm(Sx, Sy) == -i*Sz", "H == 2i*Sz",            "comm(x, H) == i*p",
                              "comm(p, H) == i*x",     "adj(adj(a-*a+)) == a-*a+"};
  for (AdjointSign s : {AdjointSign::minus, AdjointSign::plus}) {
    for (const char* text : identities) {
      INFO(text);
      const auto outcome = evaluate_check(parse_check(text, {1.0, s}), 64);
      CHECK(outcome.residual <= 1e-12);
    }
  }
  CHECK(evaluate_check(parse_check("comm(Sx, Sy) == i*Sz"), 64).residual > 1.0);
  CHECK(evaluate_check(parse_check("comm(a-, a+) == 2*I"), 16).residual == Catch::Approx(1.0));
}

TEST_CASE("evaluate_check uses the larger generator degree as margin", "[parser]") {
  CHECK(evaluate_check(parse_check("a- == a-"), 8).margin == 1);
  CHECK(evaluate_check(parse_check("I == I"), 8).margin == 1);
  CHECK(evaluate_check(parse_check("comm(S+, S-) == -2*Sz"), 8).margin == 4);
}

TEST_CASE("parse errors carry the offending position", "[parser][errors]") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_check(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
  };
  CHECK(position_of("comm(a-, a+ == I") == 12);
  CHECK(position_of("a- + * a+ == I") == 5);
  CHECK(position_of("a- == q") == 6);
  CHECK(position_of("a- a+ == I") == 3);
  CHECK(position_of("a- == ") == 6);
  CHECK_THROWS_AS(parse_check("a- + a+"), ParseError);
  CHECK_THROWS_AS(parse_expression("adj a-"), ParseError);
}
