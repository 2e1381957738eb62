#include "iwqm/polynomial.hpp"

#include <algorithm>

#include "iwqm/error.hpp"

namespace iwqm {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) { return ComplexPolynomial({c}); }

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex c) {
  if (degree < 0) throw InvalidArgument("monomial degree must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ComplexPolynomial(std::move(v));
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex ComplexPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return {};
  return coeffs_[static_cast<std::size_t>(power)];
}

Complex ComplexPolynomial::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::conjugated() const {
  std::vector<Complex> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](Complex z) { return std::conj(z); });
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::times_x() const {
  if (coeffs_.empty()) return {};
  std::vector<Complex> c(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  return a + Complex{-1.0} * b;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& a) {
  std::vector<Complex> c(a.coeffs_.size());
  std::transform(a.coeffs_.begin(), a.coeffs_.end(), c.begin(), [s](Complex z) { return s * z; });
  return ComplexPolynomial(std::move(c));
}

}  // namespace iwqm
