#pragma once

#include <span>
#include <vector>

#include "iwqm/types.hpp"

namespace iwqm {

/// Polynomial with complex coefficients stored in ascending powers.
/// Canonical form: no trailing zero coefficients (the zero polynomial is empty).
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> ascending);

  static ComplexPolynomial constant(Complex c);
  static ComplexPolynomial monomial(int degree, Complex c = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int power) const;
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  Complex operator()(Complex x) const;

  ComplexPolynomial derivative() const;
  /// Conjugates every coefficient; equals conj(p(x)) for real x.
  ComplexPolynomial conjugated() const;
  ComplexPolynomial times_x() const;

  friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& a);
  friend bool operator==(const ComplexPolynomial& a, const ComplexPolynomial& b) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

}  // namespace iwqm
