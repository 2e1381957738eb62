#include "iwqm/expression_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "iwqm/error.hpp"

namespace iwqm {

namespace {

enum class Tok { number, imag_unit, atom, adj, comm, lparen, rparen, comma, star, plus, minus, equals, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Complex value{};
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts_with = [&](std::string_view w) { return s.substr(i, w.size()) == w; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          j = k;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        }
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
      if (ec != std::errc{} || ptr != s.data() + j) throw ParseError(start, "malformed number");
      i = j;
      Complex value{v, 0.0};
      if (i < s.size() && s[i] == 'i') {
        value = Complex{0.0, v};
        ++i;
      }
      out.push_back({Tok::number, start, std::string(s.substr(start, i - start)), value});
      continue;
    }
    if (starts_with("==")) {
      out.push_back({Tok::equals, start, "==", {}});
      i += 2;
      continue;
    }
    if (starts_with("adj")) {
      out.push_back({Tok::adj, start, "adj", {}});
      i += 3;
      continue;
    }
    if (starts_with("comm")) {
      out.push_back({Tok::comm, start, "comm", {}});
      i += 4;
      continue;
    }
    static constexpr std::string_view two_char_atoms[] = {"a-", "a+", "Sz", "S+", "S-", "Sx", "Sy"};
    const auto two = std::find_if(std::begin(two_char_atoms), std::end(two_char_atoms),
                                  [&](std::string_view a) { return starts_with(a); });
    if (two != std::end(two_char_atoms)) {
      out.push_back({Tok::atom, start, std::string(*two), {}});
      i += 2;
      continue;
    }
    switch (c) {
      case 'I':
      case 'n':
      case 'H':
      case 'x':
      case 'p':
        out.push_back({Tok::atom, start, std::string(1, c), {}});
        break;
      case 'i':
        out.push_back({Tok::imag_unit, start, "i", kI});
        break;
      case '(':
        out.push_back({Tok::lparen, start, "(", {}});
        break;
      case ')':
        out.push_back({Tok::rparen, start, ")", {}});
        break;
      case ',':
        out.push_back({Tok::comma, start, ",", {}});
        break;
      case '*':
        out.push_back({Tok::star, start, "*", {}});
        break;
      case '+':
        out.push_back({Tok::plus, start, "+", {}});
        break;
      case '-':
        out.push_back({Tok::minus, start, "-", {}});
        break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  out.push_back({Tok::end, s.size(), "", {}});
  return out;
}

std::optional<Complex> pure_scalar(const OperatorExpression& e) {
  using Kind = OperatorExpression::Kind;
  if (e.kind() == Kind::identity) return Complex{1.0};
  if (e.kind() == Kind::scalar_multiple) {
    if (auto inner = pure_scalar(e.children().front())) return e.factor() * *inner;
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : tokens_(tokenize(text)), options_(options) {}

  OperatorExpression expression_only() {
    auto e = expr();
    expect(Tok::end, "end of input");
    return e;
  }

  OperatorCheck check() {
    auto lhs = expr();
    expect(Tok::equals, "'=='");
    auto rhs = expr();
    expect(Tok::end, "end of input");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const auto& t = peek();
      throw ParseError(t.pos, std::string("expected ") + what +
                                  (t.kind == Tok::end ? " but input ended" : " near '" + t.text + "'"));
    }
    ++pos_;
  }

  OperatorExpression expr() {
    auto acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      auto rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  OperatorExpression term() {
    auto acc = unary();
    while (peek().kind == Tok::star) {
      ++pos_;
      auto rhs = unary();
      if (auto s = pure_scalar(acc)) {
        acc = *s * rhs;
      } else if (auto t = pure_scalar(rhs)) {
        acc = *t * acc;
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  OperatorExpression unary() {
    if (peek().kind == Tok::minus) {
      ++pos_;
      return -unary();
    }
    return primary();
  }

  OperatorExpression primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number:
      case Tok::imag_unit:
        return t.value * OperatorExpression::identity();
      case Tok::atom:
        return atom(t);
      case Tok::adj: {
        expect(Tok::lparen, "'(' after adj");
        auto inner = expr();
        expect(Tok::rparen, "')'");
        return physical_adjoint(inner, options_.sign);
      }
      case Tok::comm: {
        expect(Tok::lparen, "'(' after comm");
        auto a = expr();
        expect(Tok::comma, "','");
        auto b = expr();
        expect(Tok::rparen, "')'");
        return commutator(a, b);
      }
      case Tok::lparen: {
        auto inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::end:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  OperatorExpression atom(const Token& t) const {
    const auto& a = t.text;
    if (a == "a-") return OperatorExpression::lowering();
    if (a == "a+") return OperatorExpression::raising();
    if (a == "I") return OperatorExpression::identity();
    if (a == "n") return named::number();
    if (a == "H") return named::hamiltonian(options_.omega);
    if (a == "Sz") return named::su11_z();
    if (a == "S+") return named::su11_plus();
    if (a == "S-") return named::su11_minus();
    if (a == "Sx") return named::su11_x();
    if (a == "Sy") return named::su11_y();
    if (a == "x") return named::position();
    if (a == "p") return named::momentum();
    throw ParseError(t.pos, "unknown atom '" + a + "'");
  }

  std::vector<Token> tokens_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpression parse_expression(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).expression_only();
}

OperatorCheck parse_check(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).check();
}

CheckOutcome evaluate_check(const OperatorCheck& check, int dim) {
  const int margin =
      std::max(1, std::max(generator_degree(check.lhs), generator_degree(check.rhs)));
  const auto lhs = evaluate(check.lhs, dim);
  const auto rhs = evaluate(check.rhs, dim);
  return {leading_block_residual(lhs, rhs, margin), margin};
}

}  // namespace iwqm
