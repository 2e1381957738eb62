#include "iwqm/commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <json.hpp>
#include <vector>

#include "iwqm/coherent.hpp"
#include "iwqm/dynamics.hpp"
#include "iwqm/eigenfunctions.hpp"
#include "iwqm/error.hpp"
#include "iwqm/quadrature.hpp"

namespace iwqm {

namespace {

nlohmann::json pair(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::string dump_eigenfunction(const EigenfunctionDump& params) {
  if (params.n < 0) throw InvalidArgument("--n must be nonnegative");
  if (params.samples < 2) throw InvalidArgument("--samples must be at least 2");
  if (!(params.x_max > params.x_min)) throw InvalidArgument("--xmax must exceed --xmin");
  const auto f = eigenfunction(params.set, params.n, params.phase);
  std::vector<double> xs(params.samples);
  for (int k = 0; k < params.samples; ++k) {
    xs[k] = params.x_min + (params.x_max - params.x_min) * k / (params.samples - 1);
  }
  const auto values = evaluate(f, xs);
  std::string out = "x,re_psi,im_psi,abs2_psi\n";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", xs[k], values[k].real(), values[k].imag(),
                       std::norm(values[k]));
  }
  return out;
}

std::string dump_gram(int nmax, int nodes) {
  if (nmax < 0) throw InvalidArgument("--nmax must be nonnegative");
  if (nodes < 1) throw InvalidArgument("--nodes must be positive");
  const ContourQuadrature rule(nodes);
  const Matrix g = gram_matrix(nmax, rule);
  const Matrix oracle = gram_matrix_by_moments(nmax);

  std::string out = "row";
  for (int n = 0; n <= nmax; ++n) out += fmt::format(",re_{0},im_{0}", n);
  out += '\n';
  for (int m = 0; m <= nmax; ++m) {
    out += std::to_string(m);
    for (int n = 0; n <= nmax; ++n) out += fmt::format(",{:.17g},{:.17g}", g(m, n).real(), g(m, n).imag());
    out += '\n';
  }
  const nlohmann::json summary = {{"nmax", nmax},
                                  {"nodes", nodes},
                                  {"identity_defect", identity_defect(g)},
                                  {"moment_oracle_deviation", (g - oracle).cwiseAbs().maxCoeff()}};
  return out + summary.dump() + "\n";
}

std::string dump_coherent(Complex alpha, const RunConfig& config) {
  config.validate();
  CoherentOptions opts;
  opts.strict = config.strict;
  const int dim = config.nmax;
  const auto ket = build_coherent(FockSet::ket, alpha, dim, opts);
  const auto bra = build_coherent(FockSet::bra, alpha, dim, opts);
  const auto u = uncertainty_product(alpha, dim, opts);
  const nlohmann::json j = {
      {"alpha", pair(alpha)},
      {"nmax", dim},
      {"bra_convention", to_string(opts.bra_convention)},
      {"pairing", pair(dual_pairing(bra.as_dual(), ket.as_dual()))},
      {"eigen_residual", {{"ket", eigen_residual(ket)}, {"bra", eigen_residual(bra, opts.bra_frame)}}},
      {"tail_bound", ket.tail_bound},
      {"truncation_warning", ket.truncation_warning},
      {"x", pair(expectation(Observable::x, alpha, dim, opts))},
      {"p", pair(expectation(Observable::p, alpha, dim, opts))},
      {"x2", pair(expectation(Observable::x2, alpha, dim, opts))},
      {"p2", pair(expectation(Observable::p2, alpha, dim, opts))},
      {"dx2", pair(u.dx2)},
      {"dp2", pair(u.dp2)},
      {"product", u.product},
      {"product_imag", u.product_imag}};
  return j.dump(2) + "\n";
}

std::string dump_evolve(const EvolveDump& params, const RunConfig& config) {
  config.validate();
  const double w = config.omega;
  const double dt = params.dt > 0.0 ? params.dt : 1e-3 / w;
  if (!(params.t_final > 0.0)) throw InvalidArgument("--tfinal must be positive");
  if (params.stride < 1) throw InvalidArgument("--stride must be positive");

  Trajectory traj;
  if (params.source == EvolveSource::grid) {
    const int steps = static_cast<int>(std::lround(params.t_final / dt));
    if (steps < 1) throw InvalidArgument("--tfinal must cover at least one step");
    traj = grid_split_step(GridState::gaussian(-40.0, 40.0, 4096, w, 0.0, 1.0, params.v), dt, steps)
               .mean_position;
  } else {
    traj = integrate_alpha(params.v, w, params.t_final, dt, 1.0).alpha;
  }

  std::string out = "t,re_x,im_x,classical_x,abs_error\n";
  for (std::size_t k = 0; k < traj.size(); k += static_cast<std::size_t>(params.stride)) {
    const double t = traj.times[k];
    const Complex x = traj.values[k];
    const double exact = classical_orbit(params.v, w, 1, t);
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", t, x.real(), x.imag(), exact,
                       std::abs(x - exact));
  }
  return out;
}

std::string dump_decay(const DecayDump& params, const RunConfig& config) {
  config.validate();
  if (params.n < 0) throw InvalidArgument("--n must be nonnegative");
  if (params.samples < 2) throw InvalidArgument("--samples must be at least 2");
  if (!(params.t_final > 0.0)) throw InvalidArgument("--tfinal must be positive");
  const double w = config.omega;
  const int dim = params.n + 2;
  const Vector e = DualVector::basis(FockSet::ket, dim, params.n).coeffs;

  std::string out = "t,growth_factor,mixed_pairing\n";
  for (int k = 0; k < params.samples; ++k) {
    const double t = params.t_final * k / (params.samples - 1);
    const DualVector ket{FockSet::ket, propagate_coefficients(FockSet::ket, e, w, t)};
    const DualVector bra{FockSet::bra, propagate_coefficients(FockSet::bra, e, w, t)};
    out += fmt::format("{:.17g},{:.17g},{:.17g}\n", t, propagate_fock(params.set, params.n, w, t),
                       dual_pairing(bra, ket).real());
  }
  return out;
}

}  // namespace iwqm
