#include "iwqm/expression.hpp"

#include <algorithm>
#include <sstream>

#include "iwqm/error.hpp"

namespace iwqm {

struct OperatorExpression::Node {
  Kind kind;
  Complex factor{1.0};
  std::vector<OperatorExpression> children;
};

OperatorExpression::OperatorExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

OperatorExpression OperatorExpression::lowering() {
  return OperatorExpression(std::make_shared<const Node>(Node{Kind::generator_minus, 1.0, {}}));
}

OperatorExpression OperatorExpression::raising() {
  return OperatorExpression(std::make_shared<const Node>(Node{Kind::generator_plus, 1.0, {}}));
}

OperatorExpression OperatorExpression::identity() {
  return OperatorExpression(std::make_shared<const Node>(Node{Kind::identity, 1.0, {}}));
}

OperatorExpression OperatorExpression::scaled(Complex factor, OperatorExpression child) {
  return OperatorExpression(
      std::make_shared<const Node>(Node{Kind::scalar_multiple, factor, {std::move(child)}}));
}

OperatorExpression OperatorExpression::sum(std::vector<OperatorExpression> children) {
  if (children.empty()) throw InvalidArgument("sum needs at least one term");
  return OperatorExpression(std::make_shared<const Node>(Node{Kind::sum, 1.0, std::move(children)}));
}

OperatorExpression OperatorExpression::product(std::vector<OperatorExpression> children) {
  if (children.empty()) throw InvalidArgument("product needs at least one factor");
  return OperatorExpression(
      std::make_shared<const Node>(Node{Kind::product, 1.0, std::move(children)}));
}

OperatorExpression::Kind OperatorExpression::kind() const { return node_->kind; }

Complex OperatorExpression::factor() const { return node_->factor; }

const std::vector<OperatorExpression>& OperatorExpression::children() const {
  return node_->children;
}

OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b) {
  return OperatorExpression::sum({a, b});
}

OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b) {
  return OperatorExpression::sum({a, OperatorExpression::scaled(-1.0, b)});
}

OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b) {
  return OperatorExpression::product({a, b});
}

OperatorExpression operator*(Complex s, const OperatorExpression& a) {
  return OperatorExpression::scaled(s, a);
}

OperatorExpression operator-(const OperatorExpression& a) {
  return OperatorExpression::scaled(-1.0, a);
}

TruncatedOperator evaluate(const OperatorExpression& expr, int dim) {
  using Kind = OperatorExpression::Kind;
  switch (expr.kind()) {
    case Kind::generator_minus:
      return build_lowering(dim);
    case Kind::generator_plus:
      return build_raising(dim);
    case Kind::identity:
      return TruncatedOperator::identity(dim);
    case Kind::scalar_multiple:
      return expr.factor() * evaluate(expr.children().front(), dim);
    case Kind::sum: {
      auto acc = evaluate(expr.children().front(), dim);
      for (std::size_t k = 1; k < expr.children().size(); ++k) {
        acc = acc + evaluate(expr.children()[k], dim);
      }
      return acc;
    }
    case Kind::product: {
      auto acc = evaluate(expr.children().front(), dim);
      for (std::size_t k = 1; k < expr.children().size(); ++k) {
        acc = acc * evaluate(expr.children()[k], dim);
      }
      return acc;
    }
  }
  throw InvalidArgument("unknown expression node");
}

OperatorExpression physical_adjoint(const OperatorExpression& expr, AdjointSign sign) {
  using Kind = OperatorExpression::Kind;
  const Complex generator_phase{0.0, to_double(sign)};
  switch (expr.kind()) {
    case Kind::generator_minus:
    case Kind::generator_plus:
      return OperatorExpression::scaled(generator_phase, expr);
    case Kind::identity:
      return expr;
    case Kind::scalar_multiple:
      return OperatorExpression::scaled(std::conj(expr.factor()),
                                        physical_adjoint(expr.children().front(), sign));
    case Kind::sum: {
      std::vector<OperatorExpression> terms;
      terms.reserve(expr.children().size());
      for (const auto& c : expr.children()) terms.push_back(physical_adjoint(c, sign));
      return OperatorExpression::sum(std::move(terms));
    }
    case Kind::product: {
      std::vector<OperatorExpression> factors;
      factors.reserve(expr.children().size());
      for (auto it = expr.children().rbegin(); it != expr.children().rend(); ++it) {
        factors.push_back(physical_adjoint(*it, sign));
      }
      return OperatorExpression::product(std::move(factors));
    }
  }
  throw InvalidArgument("unknown expression node");
}

int generator_degree(const OperatorExpression& expr) {
  using Kind = OperatorExpression::Kind;
  switch (expr.kind()) {
    case Kind::generator_minus:
    case Kind::generator_plus:
      return 1;
    case Kind::identity:
      return 0;
    case Kind::scalar_multiple:
      return generator_degree(expr.children().front());
    case Kind::sum: {
      int d = 0;
      for (const auto& c : expr.children()) d = std::max(d, generator_degree(c));
      return d;
    }
    case Kind::product: {
      int d = 0;
      for (const auto& c : expr.children()) d += generator_degree(c);
      return d;
    }
  }
  return 0;
}

namespace {

void format_complex(std::ostream& os, Complex z) {
  if (z.imag() == 0.0) {
    os << z.real();
  } else if (z.real() == 0.0) {
    os << z.imag() << "i";
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
}

void write(std::ostream& os, const OperatorExpression& expr) {
  using Kind = OperatorExpression::Kind;
  switch (expr.kind()) {
    case Kind::generator_minus:
      os << "a-";
      break;
    case Kind::generator_plus:
      os << "a+";
      break;
    case Kind::identity:
      os << "I";
      break;
    case Kind::scalar_multiple:
      format_complex(os, expr.factor());
      os << "*";
      write(os, expr.children().front());
      break;
    case Kind::sum:
    case Kind::product: {
      const char* sep = expr.kind() == Kind::sum ? " + " : "*";
      os << "(";
      for (std::size_t k = 0; k < expr.children().size(); ++k) {
        if (k) os << sep;
        write(os, expr.children()[k]);
      }
      os << ")";
      break;
    }
  }
}

}  // namespace

std::string to_string(const OperatorExpression& expr) {
  std::ostringstream os;
  write(os, expr);
  return os.str();
}

OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b) {
  return a * b - b * a;
}

namespace named {

OperatorExpression number() {
  return OperatorExpression::raising() * OperatorExpression::lowering();
}

OperatorExpression hamiltonian(double omega) {
  return Complex{0.0, omega} * (number() + Complex{0.5} * OperatorExpression::identity());
}

OperatorExpression su11_z() {
  return Complex{0.5} * (number() + Complex{0.5} * OperatorExpression::identity());
}

OperatorExpression su11_plus() {
  return Complex{0.5} * (OperatorExpression::raising() * OperatorExpression::raising());
}

OperatorExpression su11_minus() {
  return Complex{0.5} * (OperatorExpression::lowering() * OperatorExpression::lowering());
}

OperatorExpression su11_x() { return Complex{0.5} * (su11_plus() + su11_minus()); }

OperatorExpression su11_y() {
  return (1.0 / Complex{0.0, 2.0}) * (su11_plus() - su11_minus());
}

OperatorExpression position() {
  return (1.0 / std::sqrt(Complex{0.0, 2.0})) *
         (OperatorExpression::lowering() + OperatorExpression::raising());
}

OperatorExpression momentum() {
  return (1.0 / std::sqrt(Complex{0.0, 2.0})) *
         (OperatorExpression::lowering() - OperatorExpression::raising());
}

}  // namespace named

}  // namespace iwqm
