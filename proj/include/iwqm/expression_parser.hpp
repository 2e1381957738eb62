#pragma once

// Tiny grammar for operator identities, e.g. "adj(n) == -(n+I)".
//
//   check   := expr '==' expr
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := number ['i'] | 'i' | atom | 'adj' '(' expr ')'
//            | 'comm' '(' expr ',' expr ')' | '(' expr ')'
//   atom    := a- | a+ | I | n | H | Sz | S+ | S- | Sx | Sy | x | p

#include <string>
#include <string_view>

#include "iwqm/expression.hpp"

namespace iwqm {

struct ParseOptions {
  double omega = 1.0;
  AdjointSign sign = AdjointSign::minus;
};

struct OperatorCheck {
  OperatorExpression lhs;
  OperatorExpression rhs;
};

OperatorExpression parse_expression(std::string_view text, const ParseOptions& options = {});
OperatorCheck parse_check(std::string_view text, const ParseOptions& options = {});

struct CheckOutcome {
  double residual;
  int margin;
};

/// Evaluates both sides at `dim` and compares them on the leading block whose
/// margin is the larger generator degree of the two sides (at least 1).
CheckOutcome evaluate_check(const OperatorCheck& check, int dim);

}  // namespace iwqm
