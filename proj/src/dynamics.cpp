#include "iwqm/dynamics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <string>

#include "iwqm/error.hpp"
#include "iwqm/kernels.hpp"

namespace iwqm {

namespace {

constexpr double kMaxExponent = 700.0;

void require_positive_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be positive");
}

}  // namespace

double propagate_fock(FockSet set, int n, double omega, double t) {
  require_positive_omega(omega);
  if (n < 0) throw InvalidArgument("level must be nonnegative");
  if (!std::isfinite(t)) throw InvalidArgument("time must be finite");
  const double exponent = (n + 0.5) * omega * t;
  if (std::abs(exponent) > kMaxExponent) {
    throw OverflowError("growth exponent " + std::to_string(exponent) + " exceeds " +
                        std::to_string(kMaxExponent));
  }
  return std::exp(set == FockSet::ket ? exponent : -exponent);
}

Vector propagate_coefficients(FockSet set, const Vector& coeffs, double omega, double t) {
  Vector out(coeffs.size());
  for (Eigen::Index n = 0; n < coeffs.size(); ++n) {
    out(n) = propagate_fock(set, static_cast<int>(n), omega, t) * coeffs(n);
  }
  return out;
}

Matrix mixed_density(const Vector& ket0, const Vector& bra0, double omega, double t) {
  if (ket0.size() != bra0.size()) throw DimensionMismatch("ket and bra lengths differ");
  const Vector ket = propagate_coefficients(FockSet::ket, ket0, omega, t);
  const Vector bra = propagate_coefficients(FockSet::bra, bra0, omega, t);
  return ket * bra.adjoint();
}

Matrix ket_density(const Vector& ket0, double omega, double t) {
  const Vector ket = propagate_coefficients(FockSet::ket, ket0, omega, t);
  return ket * ket.adjoint();
}

double density_invariant_residual(const Vector& ket0, const Vector& bra0, double omega, double dt,
                                  double t) {
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  const int dim = static_cast<int>(ket0.size());
  const Matrix h = build_hamiltonian(dim, omega).matrix();
  const Matrix rho = mixed_density(ket0, bra0, omega, t);
  const Matrix drho =
      (mixed_density(ket0, bra0, omega, t + dt) - mixed_density(ket0, bra0, omega, t - dt)) /
      (2.0 * dt);
  return (kI * drho + (rho * h - h * rho)).cwiseAbs().maxCoeff();
}

double density_invariant_residual(int n, double omega, double dt, double t) {
  if (n < 0) throw InvalidArgument("level must be nonnegative");
  const int dim = n + 2;
  const Vector e = DualVector::basis(FockSet::ket, dim, n).coeffs;
  return density_invariant_residual(e, e, omega, dt, t);
}

double classical_orbit(double v, double omega, int sign, double t) {
  require_positive_omega(omega);
  if (sign != 1 && sign != -1) throw InvalidArgument("orbit sign must be +1 or -1");
  return sign * (v / omega) * std::sinh(omega * t);
}

void Trajectory::validate() const {
  if (times.size() != values.size()) throw InvalidArgument("trajectory lengths differ");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw InvalidArgument("trajectory times must increase");
  }
}

double max_relative_orbit_error(const Trajectory& trajectory, double v, double omega, int sign) {
  double worst = 0.0;
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const double exact = classical_orbit(v, omega, sign, trajectory.times[k]);
    const double diff = std::abs(trajectory.values[k] - exact);
    worst = std::max(worst, exact == 0.0 ? diff : diff / std::abs(exact));
  }
  return worst;
}

AlphaTrajectory integrate_alpha(double v, double omega, double t_final, double dt, double tolerance) {
  require_positive_omega(omega);
  if (!(dt > 0.0) || !(t_final > 0.0)) throw InvalidArgument("dt and t_final must be positive");
  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  const double h = t_final / static_cast<double>(steps);
  const double w2 = omega * omega;

  AlphaTrajectory out;
  out.alpha.times.reserve(steps + 1);
  out.alpha.values.reserve(steps + 1);
  out.velocity.times.reserve(steps + 1);
  out.velocity.values.reserve(steps + 1);

  Complex a{0.0}, u{v};
  auto record = [&](double t) {
    out.alpha.times.push_back(t);
    out.alpha.values.push_back(a);
    out.velocity.times.push_back(t);
    out.velocity.values.push_back(u);
  };
  record(0.0);
  for (long s = 1; s <= steps; ++s) {
    // y = (a, u), y' = (u, w2 a)
    const Complex k1a = u, k1u = w2 * a;
    const Complex k2a = u + 0.5 * h * k1u, k2u = w2 * (a + 0.5 * h * k1a);
    const Complex k3a = u + 0.5 * h * k2u, k3u = w2 * (a + 0.5 * h * k2a);
    const Complex k4a = u + h * k3u, k4u = w2 * (a + h * k3a);
    a += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    record(static_cast<double>(s) * h);
  }

  const double err = max_relative_orbit_error(out.alpha, v, omega, 1);
  if (err > tolerance) {
    throw AccuracyError("RK4 trajectory deviates from the sinh orbit by " + std::to_string(err) +
                        " (relative); reduce dt");
  }
  return out;
}

std::vector<double> GridState::positions() const {
  std::vector<double> x(psi.size());
  const double h = dx();
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = x_min + static_cast<double>(j) * h;
  return x;
}

double GridState::norm() const { return kernels::sum_abs2(psi) * dx(); }

double GridState::mean_position() const {
  const auto x = positions();
  return kernels::weighted_sum_abs2(psi, x) / kernels::sum_abs2(psi);
}

GridState GridState::gaussian(double x_min, double x_max, std::size_t points, double omega,
                              double center, double width, double momentum) {
  if (!(x_max > x_min)) throw InvalidArgument("grid needs x_max > x_min");
  if (points < 4 || !std::has_single_bit(points)) {
    throw InvalidArgument("grid point count must be a power of two >= 4");
  }
  if (!(width > 0.0)) throw InvalidArgument("packet width must be positive");
  require_positive_omega(omega);
  GridState g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.omega = omega;
  g.psi.resize(points);
  const double amp = std::pow(kPi * width * width, -0.25);
  const auto x = g.positions();
  for (std::size_t j = 0; j < points; ++j) {
    const double d = (x[j] - center) / width;
    g.psi[j] = amp * std::exp(-0.5 * d * d) * std::polar(1.0, momentum * x[j]);
  }
  const double scale = 1.0 / std::sqrt(g.norm());
  for (auto& z : g.psi) z *= scale;
  return g;
}

namespace {

// Planner calls are not thread-safe in FFTW; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftPlan {
 public:
  FftPlan(std::vector<Complex>& buffer, int direction) {
    std::lock_guard lock(planner_mutex());
    auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
    plan_ = fftw_plan_dft_1d(static_cast<int>(buffer.size()), data, data, direction, FFTW_ESTIMATE);
    if (!plan_) throw Error("FFTW plan creation failed");
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }

  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

double edge_amplitude(const std::vector<Complex>& psi, std::size_t edge) {
  double worst = 0.0;
  const std::size_t n = std::min(edge, psi.size());
  for (std::size_t j = 0; j < n; ++j) {
    worst = std::max({worst, std::abs(psi[j]), std::abs(psi[psi.size() - 1 - j])});
  }
  return worst;
}

}  // namespace

SplitStepResult grid_split_step(const GridState& initial, double dt, int steps,
                                const SplitStepOptions& options) {
  const std::size_t n = initial.points();
  if (n < 4 || !std::has_single_bit(n)) throw InvalidArgument("grid point count must be a power of two");
  if (!(dt > 0.0) || steps < 1) throw InvalidArgument("split step needs dt > 0 and steps >= 1");
  require_positive_omega(initial.omega);

  const double h = initial.dx();
  const double w2 = initial.omega * initial.omega;
  const auto x = initial.positions();

  // exp(-i V dt/2) with V = -w^2 x^2 / 2.
  std::vector<Complex> half_potential(n);
  for (std::size_t j = 0; j < n; ++j) half_potential[j] = std::polar(1.0, 0.25 * w2 * x[j] * x[j] * dt);

  // exp(-i k^2 dt/2) / n; 1/n is exact for powers of two.
  std::vector<Complex> kinetic(n);
  const double dk = 2.0 * kPi / (static_cast<double>(n) * h);
  for (std::size_t j = 0; j < n; ++j) {
    const double idx = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    const double k = idx * dk;
    kinetic[j] = std::polar(1.0 / static_cast<double>(n), -0.5 * k * k * dt);
  }

  SplitStepResult result;
  result.final_state = initial;
  auto& psi = result.final_state.psi;
  const FftPlan forward(psi, FFTW_FORWARD);
  const FftPlan backward(psi, FFTW_BACKWARD);

  const double norm0 = result.final_state.norm();
  auto& traj = result.mean_position;
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.values.reserve(static_cast<std::size_t>(steps) + 1);

  auto observe = [&](double t) {
    const double edge = edge_amplitude(psi, options.edge_points);
    result.max_edge_amplitude = std::max(result.max_edge_amplitude, edge);
    if (edge > options.boundary_tolerance) {
      throw BoundaryLeakError("wave function reaches the grid boundary (|psi| = " +
                              std::to_string(edge) + " at t = " + std::to_string(t) + ")");
    }
    const double drift = std::abs(result.final_state.norm() - norm0);
    result.max_norm_drift = std::max(result.max_norm_drift, drift);
    if (drift > options.norm_tolerance) {
      throw NormDriftError("L2 norm drifted by " + std::to_string(drift) + " at t = " +
                           std::to_string(t));
    }
    traj.times.push_back(t);
    traj.values.emplace_back(result.final_state.mean_position(), 0.0);
  };

  observe(0.0);
  for (int s = 1; s <= steps; ++s) {
    kernels::multiply_inplace(psi, half_potential);
    forward.execute();
    kernels::multiply_inplace(psi, kinetic);
    backward.execute();
    kernels::multiply_inplace(psi, half_potential);
    observe(static_cast<double>(s) * dt);
  }
  return result;
}

}  // namespace iwqm
