#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "iwqm/report.hpp"
#include "iwqm/types.hpp"

namespace iwqm {

struct RunConfig {
  /// Fock-space dimension for the matrix suites.
  int nmax = 64;
  double omega = 1.0;
  /// Tolerance for coherent-state checks and op-check.
  double tol = 1e-10;
  OutputFormat format = OutputFormat::json;
  AdjointSign sigma = AdjointSign::minus;
  /// Never widen tolerances for truncation; report budget violations as failures.
  bool strict = false;
  /// Seed for randomized alpha sampling.
  std::uint64_t seed = 0;

  /// Throws InvalidArgument for nmax < 4, omega <= 0 or tol <= 0.
  void validate() const;
};

/// Reads IWQM_SEED; 0 when unset. Throws InvalidArgument on a malformed value.
std::uint64_t seed_from_environment();

/// sum_{n >= dim-2} r^{2n} / n!, the weight a dim-level coherent state loses
/// in second-order observables.
double coherent_truncation_tail(double r, int dim);

/// max(tol, 100 (1 + r)^4 * tail); equals tol when truncation is negligible.
double truncation_adjusted_tolerance(double tol, double r, int dim);

Report run_algebra_suite(const RunConfig& config);
Report run_eigenfunction_suite(const RunConfig& config);
Report run_gram_suite(const RunConfig& config);
Report run_coherent_suite(const RunConfig& config);
Report run_dynamics_suite(const RunConfig& config);

/// All five suites in fixed order.
std::vector<Report> cmd_verify(const RunConfig& config);

/// Parses `LHS == RHS`, evaluates both sides at dim nmax and compares the
/// leading block against config.tol.
Report cmd_op_check(std::string_view expression, const RunConfig& config);

/// The 25-point alpha grid {-1.4, -0.7, 0, 0.7, 1.4}^2 (|alpha| <= 1.98).
std::vector<Complex> coherent_alpha_grid();

}  // namespace iwqm
