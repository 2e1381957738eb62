#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "iwqm/fock.hpp"
#include "iwqm/types.hpp"

namespace iwqm {

/// Immutable symbolic operator over the generators a- and a+.
///
/// Products keep the order of their children and evaluate left to right.
/// Copies share structure; nodes are never mutated after construction.
class OperatorExpression {
 public:
  enum class Kind { generator_minus, generator_plus, identity, scalar_multiple, sum, product };

  static OperatorExpression lowering();
  static OperatorExpression raising();
  static OperatorExpression identity();
  static OperatorExpression scaled(Complex factor, OperatorExpression child);
  static OperatorExpression sum(std::vector<OperatorExpression> children);
  static OperatorExpression product(std::vector<OperatorExpression> children);

  Kind kind() const;
  /// Factor of a scalar_multiple node; 1 otherwise.
  Complex factor() const;
  const std::vector<OperatorExpression>& children() const;

  friend OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator*(Complex s, const OperatorExpression& a);
  friend OperatorExpression operator-(const OperatorExpression& a);

 private:
  struct Node;
  explicit OperatorExpression(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

TruncatedOperator evaluate(const OperatorExpression& expr, int dim);

/// Antihomomorphism: reverses products, conjugates scalars and maps each
/// generator g to (sign * i) g.
OperatorExpression physical_adjoint(const OperatorExpression& expr,
                                    AdjointSign sign = AdjointSign::minus);

/// Highest number of generators multiplied together in any term.
int generator_degree(const OperatorExpression& expr);

std::string to_string(const OperatorExpression& expr);

OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b);

namespace named {

OperatorExpression number();
OperatorExpression hamiltonian(double omega);
OperatorExpression su11_z();
OperatorExpression su11_plus();
OperatorExpression su11_minus();
OperatorExpression su11_x();
OperatorExpression su11_y();
OperatorExpression position();
OperatorExpression momentum();

}  // namespace named

}  // namespace iwqm
