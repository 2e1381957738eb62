#pragma once

#include <string>

#include "iwqm/fock.hpp"
#include "iwqm/suites.hpp"

namespace iwqm {

struct EigenfunctionDump {
  FockSet set = FockSet::ket;
  int n = 0;
  double x_min = -5.0;
  double x_max = 5.0;
  int samples = 1001;
  BraPhase phase = BraPhase::plus_i;
};

/// CSV: x,re_psi,im_psi,abs2_psi
std::string dump_eigenfunction(const EigenfunctionDump& params);

/// CSV rows of the (nmax+1)^2 Gram matrix with Re/Im interleaved, then one
/// JSON line summarizing the identity defect and the moment-oracle deviation.
std::string dump_gram(int nmax, int nodes);

/// JSON object {pairing, eigen_residual, x, p, x2, p2, dx2, dp2, product, ...};
/// complex values are [re, im] pairs.
std::string dump_coherent(Complex alpha, const RunConfig& config);

enum class EvolveSource { grid, alpha };

struct EvolveDump {
  double v = 0.5;
  double t_final = 1.5;
  /// Time step; nonpositive selects 1e-3 / omega.
  double dt = 0.0;
  /// Emit every `stride`-th step.
  int stride = 10;
  EvolveSource source = EvolveSource::grid;
};

/// CSV: t,re_x,im_x,classical_x,abs_error. The grid source reports the L2
/// expectation <x>; the alpha source reports alpha(t) from RK4.
std::string dump_evolve(const EvolveDump& params, const RunConfig& config);

struct DecayDump {
  int n = 0;
  double t_final = 1.0;
  int samples = 11;
  FockSet set = FockSet::ket;
};

/// CSV: t,growth_factor,mixed_pairing
std::string dump_decay(const DecayDump& params, const RunConfig& config);

}  // namespace iwqm
