#include "iwqm/fock.hpp"

#include <cmath>
#include <string>

#include "iwqm/error.hpp"

namespace iwqm {

namespace {

void require_dim(int dim, int minimum, const char* what) {
  if (dim < minimum) {
    throw InvalidDimension(std::string(what) + ": dimension " + std::to_string(dim) +
                           " is below the minimum " + std::to_string(minimum));
  }
}

void require_same_dim(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

TruncatedOperator::TruncatedOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionMismatch("truncated operator must be square");
  }
  require_dim(static_cast<int>(entries_.rows()), 2, "TruncatedOperator");
}

TruncatedOperator TruncatedOperator::zero(int dim) {
  require_dim(dim, 2, "zero");
  return TruncatedOperator(Matrix::Zero(dim, dim));
}

TruncatedOperator TruncatedOperator::identity(int dim) {
  require_dim(dim, 2, "identity");
  return TruncatedOperator(Matrix::Identity(dim, dim));
}

Vector TruncatedOperator::apply(const Vector& v) const {
  if (v.size() != entries_.cols()) {
    throw DimensionMismatch("vector length does not match operator dimension");
  }
  return entries_ * v;
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_dim(a, b);
  return TruncatedOperator(a.entries_ + b.entries_);
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_dim(a, b);
  return TruncatedOperator(a.entries_ - b.entries_);
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_dim(a, b);
  return TruncatedOperator(a.entries_ * b.entries_);
}

TruncatedOperator operator*(Complex s, const TruncatedOperator& a) {
  return TruncatedOperator(s * a.entries_);
}

TruncatedOperator operator-(const TruncatedOperator& a) { return TruncatedOperator(-a.entries_); }

TruncatedOperator build_lowering(int dim) {
  require_dim(dim, 2, "build_lowering");
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return TruncatedOperator(std::move(m));
}

TruncatedOperator build_raising(int dim) {
  require_dim(dim, 2, "build_raising");
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) m(n, n - 1) = std::sqrt(static_cast<double>(n));
  return TruncatedOperator(std::move(m));
}

TruncatedOperator build_number(int dim) { return build_raising(dim) * build_lowering(dim); }

TruncatedOperator build_hamiltonian(int dim, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("omega must be a positive finite number");
  }
  return Complex{0.0, omega} * (build_number(dim) + Complex{0.5} * TruncatedOperator::identity(dim));
}

TruncatedOperator build_position(int dim) {
  const Complex scale = 1.0 / std::sqrt(Complex{0.0, 2.0});
  return scale * (build_lowering(dim) + build_raising(dim));
}

TruncatedOperator build_momentum(int dim) {
  const Complex scale = 1.0 / std::sqrt(Complex{0.0, 2.0});
  return scale * (build_lowering(dim) - build_raising(dim));
}

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

double max_abs(const TruncatedOperator& a) { return a.matrix().cwiseAbs().maxCoeff(); }

double leading_block_residual(const TruncatedOperator& a, const TruncatedOperator& b, int margin) {
  require_same_dim(a, b);
  const int block = a.dim() - margin;
  if (margin < 0 || block < 1) {
    throw InvalidDimension("leading block is empty for dimension " + std::to_string(a.dim()) +
                           " and margin " + std::to_string(margin));
  }
  return (a.matrix().topLeftCorner(block, block) - b.matrix().topLeftCorner(block, block))
      .cwiseAbs()
      .maxCoeff();
}

Su11Generators build_su11(int dim, double omega) {
  require_dim(dim, 4, "build_su11");
  const auto lower = build_lowering(dim);
  const auto raise = build_raising(dim);
  const auto id = TruncatedOperator::identity(dim);

  auto sz = Complex{0.5} * (raise * lower + Complex{0.5} * id);
  auto sp = Complex{0.5} * (raise * raise);
  auto sm = Complex{0.5} * (lower * lower);
  auto sx = Complex{0.5} * (sp + sm);
  auto sy = (1.0 / Complex{0.0, 2.0}) * (sp - sm);

  const auto h = build_hamiltonian(dim, omega);
  const double residual = max_abs(h - Complex{0.0, 2.0 * omega} * sz);
  return {std::move(sz), std::move(sp), std::move(sm), std::move(sx), std::move(sy), residual};
}

Complex phase_value(BraPhase phase) {
  return phase == BraPhase::minus_i ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
}

TruncatedOperator build_bra_lowering(int dim, BraPhase phase) {
  return phase_value(phase) * build_lowering(dim);
}

TruncatedOperator build_bra_raising(int dim, BraPhase phase) {
  return phase_value(phase) * build_raising(dim);
}

DualVector DualVector::basis(FockSet set, int dim, int n) {
  require_dim(dim, 1, "DualVector::basis");
  if (n < 0 || n >= dim) {
    throw InvalidArgument("basis index " + std::to_string(n) + " outside [0, " +
                          std::to_string(dim) + ")");
  }
  Vector v = Vector::Zero(dim);
  v(n) = 1.0;
  return {set, std::move(v)};
}

Complex dual_pairing(const DualVector& bra, const DualVector& ket) {
  if (bra.set != FockSet::bra || ket.set != FockSet::ket) {
    throw ContractViolation("pairing is defined only as l<bra|ket>_r, got " +
                            std::string(to_string(bra.set)) + " against " +
                            std::string(to_string(ket.set)));
  }
  if (bra.dim() != ket.dim()) {
    throw DimensionMismatch("pairing dimensions differ");
  }
  // Eigen's dot() conjugates its left operand.
  return bra.coeffs.dot(ket.coeffs);
}

Complex dual_expectation(const DualVector& bra, const TruncatedOperator& op,
                         const DualVector& ket) {
  return dual_pairing(bra, DualVector{FockSet::ket, op.apply(ket.coeffs)});
}

}  // namespace iwqm
