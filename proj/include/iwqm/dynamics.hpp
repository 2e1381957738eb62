#pragma once

#include <vector>

#include "iwqm/fock.hpp"
#include "iwqm/types.hpp"

namespace iwqm {

/// Growth factor of the n-th stationary state: e^{+(n+1/2) omega t} for kets,
/// e^{-(n+1/2) omega t} for bras. Throws OverflowError past exponent 700.
double propagate_fock(FockSet set, int n, double omega, double t);

/// Applies the diagonal propagator of the given family to a coefficient vector.
Vector propagate_coefficients(FockSet set, const Vector& coeffs, double omega, double t);

/// |psi(t)>_r l<psi(t)| in the ket frame, from initial ket and bra coefficients.
Matrix mixed_density(const Vector& ket0, const Vector& bra0, double omega, double t);

/// |psi(t)>_r r<psi(t)|, the same-set density (not conserved).
Matrix ket_density(const Vector& ket0, double omega, double t);

/// max |i d(rho)/dt + [rho, H]| at time t, with d/dt by centered differences
/// of step dt. Vanishes up to O(dt^2) for the mixed density.
double density_invariant_residual(const Vector& ket0, const Vector& bra0, double omega, double dt,
                                  double t = 0.0);
/// Same for rho = |psi_n(t)>_r l<psi_n(t)|.
double density_invariant_residual(int n, double omega, double dt, double t = 0.0);

/// sign * (v / omega) * sinh(omega t)
double classical_orbit(double v, double omega, int sign, double t);

/// Time series of an observable; times strictly increasing.
struct Trajectory {
  std::vector<double> times;
  std::vector<Complex> values;

  std::size_t size() const { return times.size(); }
  /// Throws InvalidArgument if lengths differ or times are not increasing.
  void validate() const;
};

struct AlphaTrajectory {
  Trajectory alpha;
  Trajectory velocity;
};

/// Fourth-order Runge-Kutta for alpha'' = omega^2 alpha, alpha(0) = 0,
/// alpha'(0) = v. Throws AccuracyError when the relative deviation from the
/// sinh closed form exceeds `tolerance`.
AlphaTrajectory integrate_alpha(double v, double omega, double t_final, double dt,
                                double tolerance = 1e-8);

/// Max relative deviation of a trajectory from sign*(v/omega) sinh(omega t),
/// skipping samples where the closed form vanishes.
double max_relative_orbit_error(const Trajectory& trajectory, double v, double omega, int sign = 1);

/// Wave function of a unit-mass particle sampled on a periodic grid
/// x_j = x_min + j dx, dx = (x_max - x_min) / points.
struct GridState {
  double x_min = -40.0;
  double x_max = 40.0;
  double omega = 1.0;
  std::vector<Complex> psi;

  std::size_t points() const { return psi.size(); }
  double dx() const { return (x_max - x_min) / static_cast<double>(psi.size()); }
  std::vector<double> positions() const;
  /// sum |psi|^2 dx
  double norm() const;
  /// sum x |psi|^2 dx / norm
  double mean_position() const;

  /// (pi w^2)^{-1/4} exp(-(x - x0)^2 / (2 w^2) + i v x), renormalized on the grid.
  static GridState gaussian(double x_min, double x_max, std::size_t points, double omega,
                            double center, double width, double momentum);
};

struct SplitStepOptions {
  double boundary_tolerance = 1e-10;
  double norm_tolerance = 1e-8;
  /// Grid points at each end inspected by the boundary check.
  std::size_t edge_points = 8;
};

struct SplitStepResult {
  Trajectory mean_position;
  double max_norm_drift = 0.0;
  double max_edge_amplitude = 0.0;
  GridState final_state;
};

/// Strang-split evolution under H = p^2/2 - omega^2 x^2/2 with spectral
/// kinetic steps. Records the L2 expectation <x>(t) after every step.
SplitStepResult grid_split_step(const GridState& initial, double dt, int steps,
                                const SplitStepOptions& options = {});

}  // namespace iwqm
