// iwqm: verification suites, operator checks and data dumps for the inverted
// oscillator. Exit codes: 0 pass, 1 failure or runtime error, 2 usage error.

#include <CLI11.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "iwqm/commands.hpp"
#include "iwqm/error.hpp"
#include "iwqm/report.hpp"
#include "iwqm/suites.hpp"

namespace {

constexpr int kUsageError = 2;

struct CommonFlags {
  iwqm::RunConfig config;
  std::string format = "json";
  std::string sigma = "-1";
  std::string out;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--nmax", flags.config.nmax, "Fock-space dimension")->capture_default_str();
  sub->add_option("--omega", flags.config.omega, "Oscillator frequency")->capture_default_str();
  sub->add_option("--tol", flags.config.tol, "Tolerance for coherent and op-check residuals")
      ->capture_default_str();
  sub->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--sigma", flags.sigma, "Adjoint sign: -1 or +1")
      ->check(CLI::IsMember({"-1", "+1", "1", "minus", "plus"}))
      ->capture_default_str();
  sub->add_flag("--strict", flags.config.strict, "Do not widen tolerances for truncation");
  sub->add_option("--out", flags.out, "Write output to this path instead of stdout");
}

void finalize(CommonFlags& flags) {
  flags.config.format = flags.format == "csv" ? iwqm::OutputFormat::csv : iwqm::OutputFormat::json;
  flags.config.sigma = (flags.sigma == "-1" || flags.sigma == "minus") ? iwqm::AdjointSign::minus
                                                                        : iwqm::AdjointSign::plus;
  flags.config.seed = iwqm::seed_from_environment();
  flags.config.validate();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  file << text;
  file.close();
  if (!file) throw std::runtime_error("cannot write '" + path + "': " + std::strerror(errno));
}

iwqm::FockSet parse_set(const std::string& s) {
  return s == "bra" ? iwqm::FockSet::bra : iwqm::FockSet::ket;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverted potential well: ladder algebra, dual eigenstates and dynamics checks"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* verify = app.add_subcommand("verify", "Run all verification suites");
  add_common(verify, flags);

  std::string expression;
  auto* op_check = app.add_subcommand("op-check", "Evaluate an operator identity 'LHS == RHS'");
  op_check->add_option("expression", expression, "Identity to check, e.g. 'comm(a-, a+) == I'")
      ->required();
  add_common(op_check, flags);

  auto* dump = app.add_subcommand("dump", "Emit plot-ready data");
  dump->require_subcommand(1);

  iwqm::EigenfunctionDump eig;
  std::string eig_set = "ket";
  std::string eig_phase = "plus_i";
  auto* d_eig = dump->add_subcommand("eigenfunction", "Sample psi_n on a grid (CSV)");
  d_eig->add_option("--set", eig_set)->check(CLI::IsMember({"ket", "bra"}))->capture_default_str();
  d_eig->add_option("--n", eig.n)->capture_default_str();
  d_eig->add_option("--xmin", eig.x_min)->capture_default_str();
  d_eig->add_option("--xmax", eig.x_max)->capture_default_str();
  d_eig->add_option("--samples", eig.samples)->capture_default_str();
  d_eig->add_option("--bra-phase", eig_phase, "Bra ladder phase")
      ->check(CLI::IsMember({"plus_i", "minus_i"}))
      ->capture_default_str();
  add_common(d_eig, flags);

  int gram_nmax = 12;
  int gram_nodes = 64;
  auto* d_gram = dump->add_subcommand("gram", "Bra/ket Gram matrix (CSV + JSON summary)");
  add_common(d_gram, flags);
  // Here --nmax is the highest level in the Gram matrix.
  d_gram->remove_option(d_gram->get_option("--nmax"));
  d_gram->add_option("--nmax", gram_nmax, "Highest eigenfunction level")->capture_default_str();
  d_gram->add_option("--nodes", gram_nodes, "Gauss-Hermite nodes")->capture_default_str();

  double alpha_re = 1.0;
  double alpha_im = 0.0;
  auto* d_coh = dump->add_subcommand("coherent", "Coherent-state observables (JSON)");
  d_coh->add_option("--alpha-re", alpha_re)->capture_default_str();
  d_coh->add_option("--alpha-im", alpha_im)->capture_default_str();
  add_common(d_coh, flags);

  iwqm::EvolveDump evo;
  std::string evo_source = "grid";
  auto* d_evo = dump->add_subcommand("evolve", "Trajectory against the classical orbit (CSV)");
  d_evo->add_option("--v", evo.v, "Initial velocity")->capture_default_str();
  d_evo->add_option("--tfinal", evo.t_final)->capture_default_str();
  d_evo->add_option("--dt", evo.dt, "Time step (default 1e-3/omega)");
  d_evo->add_option("--stride", evo.stride, "Emit every k-th step")->capture_default_str();
  d_evo->add_option("--source", evo_source)->check(CLI::IsMember({"grid", "alpha"}))->capture_default_str();
  add_common(d_evo, flags);

  iwqm::DecayDump dec;
  std::string dec_set = "ket";
  auto* d_dec = dump->add_subcommand("decay", "Growth factor and mixed pairing of level n (CSV)");
  d_dec->add_option("--n", dec.n)->capture_default_str();
  d_dec->add_option("--tfinal", dec.t_final)->capture_default_str();
  d_dec->add_option("--samples", dec.samples)->capture_default_str();
  d_dec->add_option("--set", dec_set)->check(CLI::IsMember({"ket", "bra"}))->capture_default_str();
  add_common(d_dec, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    finalize(flags);
    if (verify->parsed()) {
      const auto reports = iwqm::cmd_verify(flags.config);
      emit(iwqm::render(reports, flags.config.format), flags.out);
      return iwqm::all_pass(reports) ? 0 : 1;
    }
    if (op_check->parsed()) {
      const std::vector<iwqm::Report> reports{iwqm::cmd_op_check(expression, flags.config)};
      emit(iwqm::render(reports, flags.config.format), flags.out);
      return iwqm::all_pass(reports) ? 0 : 1;
    }
    if (d_eig->parsed()) {
      eig.set = parse_set(eig_set);
      eig.phase = eig_phase == "minus_i" ? iwqm::BraPhase::minus_i : iwqm::BraPhase::plus_i;
      emit(iwqm::dump_eigenfunction(eig), flags.out);
    } else if (d_gram->parsed()) {
      emit(iwqm::dump_gram(gram_nmax, gram_nodes), flags.out);
    } else if (d_coh->parsed()) {
      emit(iwqm::dump_coherent({alpha_re, alpha_im}, flags.config), flags.out);
    } else if (d_evo->parsed()) {
      evo.source = evo_source == "alpha" ? iwqm::EvolveSource::alpha : iwqm::EvolveSource::grid;
      emit(iwqm::dump_evolve(evo, flags.config), flags.out);
    } else if (d_dec->parsed()) {
      dec.set = parse_set(dec_set);
      emit(iwqm::dump_decay(dec, flags.config), flags.out);
    }
    return 0;
  } catch (const iwqm::ParseError& e) {
    std::cerr << "iwqm: " << e.what() << '\n';
    return kUsageError;
  } catch (const iwqm::InvalidArgument& e) {
    std::cerr << "iwqm: " << e.what() << '\n';
    return kUsageError;
  } catch (const iwqm::InvalidDimension& e) {
    std::cerr << "iwqm: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "iwqm: " << e.what() << '\n';
    return 1;
  }
}
