#pragma once

// Truncated biorthogonal Fock representation of the imaginary-frequency
// boson algebra: a- and a+ with [a-, a+] = 1, the non-Hermitian number
// operator n = a+ a-, the Hamiltonian i*omega*(n + 1/2) and its SU(1,1)
// realization.
//
// Kets |n>_r and bras |n>_l are both standard unit vectors; the pairing
// l<.|.>_r is the Euclidean sesquilinear form on coefficients.

#include <Eigen/Dense>

#include "iwqm/types.hpp"

namespace iwqm {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense dim x dim operator on the first dim Fock levels (dim >= 2).
class TruncatedOperator {
 public:
  explicit TruncatedOperator(Matrix entries);

  static TruncatedOperator zero(int dim);
  static TruncatedOperator identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Vector apply(const Vector& v) const;

  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator*(Complex s, const TruncatedOperator& a);
  friend TruncatedOperator operator-(const TruncatedOperator& a);

 private:
  Matrix entries_;
};

TruncatedOperator build_lowering(int dim);
TruncatedOperator build_raising(int dim);
TruncatedOperator build_number(int dim);
TruncatedOperator build_hamiltonian(int dim, double omega);

/// x = (a- + a+)/sqrt(2i), p = (a- - a+)/sqrt(2i).
TruncatedOperator build_position(int dim);
TruncatedOperator build_momentum(int dim);

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b);

/// Largest entry magnitude.
double max_abs(const TruncatedOperator& a);

/// max |a - b| over the leading (dim - margin) square block. Products of k
/// ladder matrices are exact on the block with margin k; a single commutator
/// [a-, a+] only needs margin 1.
double leading_block_residual(const TruncatedOperator& a, const TruncatedOperator& b,
                              int margin = 1);

struct Su11Generators {
  TruncatedOperator sz;
  TruncatedOperator s_plus;
  TruncatedOperator s_minus;
  TruncatedOperator sx;
  TruncatedOperator sy;
  /// max |H - 2 i omega Sz| over the whole matrix.
  double hamiltonian_residual;
};

/// Sz = (a+ a- + 1/2)/2, S+- = a+-^2 / 2, Sx = (S+ + S-)/2, Sy = (S+ - S-)/(2i).
Su11Generators build_su11(int dim, double omega = 1.0);

// Bra frame -----------------------------------------------------------------

/// Phase solving c+ * c- = -n for the bra ladder coefficients:
/// a+ |n>_l = phase sqrt(n) |n-1>_l and a- |n-1>_l = phase sqrt(n) |n>_l.
enum class BraPhase { minus_i, plus_i };

Complex phase_value(BraPhase phase);

/// Matrix of a+ acting on bra coefficient vectors (the bra lowering operator).
TruncatedOperator build_bra_lowering(int dim, BraPhase phase = BraPhase::minus_i);
/// Matrix of a- acting on bra coefficient vectors (the bra raising operator).
TruncatedOperator build_bra_raising(int dim, BraPhase phase = BraPhase::minus_i);

// Dual vectors ----------------------------------------------------------------

struct DualVector {
  FockSet set;
  Vector coeffs;

  int dim() const { return static_cast<int>(coeffs.size()); }

  /// |n>_r or |n>_l: the n-th standard unit vector.
  static DualVector basis(FockSet set, int dim, int n);
};

/// l<bra|ket>_r = sum conj(bra_n) ket_n. Throws ContractViolation unless the
/// arguments are a bra and a ket, in that order.
Complex dual_pairing(const DualVector& bra, const DualVector& ket);

/// l<bra| op |ket>_r with op acting on the ket.
Complex dual_expectation(const DualVector& bra, const TruncatedOperator& op,
                         const DualVector& ket);

}  // namespace iwqm
