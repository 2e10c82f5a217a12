// birqi.cpp — command-line front-end: repeated-interaction experiments on
// bipartite open quantum systems (entanglement curves, discrete-to-
// continuous convergence, effective Hamiltonians, thermalization).
#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "birqi/commands.hpp"
#include "birqi/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Bipartite repeated-quantum-interaction simulator: discrete ancilla "
      "collisions, their Lindblad limit, entanglement and thermalization "
      "diagnostics."};
  app.require_subcommand(1);

  birqi::cli::EntanglementCurveArgs curve;
  CLI::App* c_curve = app.add_subcommand(
      "entanglement-curve",
      "Concurrence / entanglement-of-formation curve of the limit dynamics");
  c_curve->add_option("--config", curve.config, "Model config file or preset")
      ->capture_default_str();
  c_curve->add_option("--initial", curve.initial,
                      "Initial state: e<i>e<j> or a density-matrix JSON file");
  c_curve->add_option("--t-max", curve.t_max, "End of the time grid")
      ->capture_default_str();
  c_curve->add_option("--dt", curve.dt, "Grid spacing")->capture_default_str();
  c_curve->add_option("--ancilla", curve.ancilla, "Ancilla state: ground|gibbs")
      ->capture_default_str();
  CLI::Option* curve_beta =
      c_curve->add_option("--beta", curve.beta, "Inverse temperature for gibbs");
  c_curve->add_option("--out", curve.out, "CSV output path (default stdout)");
  c_curve->add_flag("--emit-config", curve.emit_config,
                    "Write the normalized model config and exit");

  birqi::cli::ConvergenceArgs conv;
  CLI::App* c_conv = app.add_subcommand(
      "convergence",
      "Trace distance between the discrete dynamics and the limit semigroup");
  c_conv->set_help_flag("--help", "Print this help message and exit");
  c_conv->add_option("--config", conv.config, "Model config file or preset")
      ->capture_default_str();
  c_conv->add_option("--initial", conv.initial,
                     "Initial state (default: highest basis state)");
  c_conv->add_option("--t-max", conv.t_max, "Comparison time")
      ->capture_default_str();
  c_conv
      ->add_option("--h", conv.h_list,
                   "Step sizes, positive and strictly decreasing")
      ->delimiter(',');
  c_conv->add_option("--ancilla", conv.ancilla, "Ancilla state: ground|gibbs")
      ->capture_default_str();
  CLI::Option* conv_beta =
      c_conv->add_option("--beta", conv.beta, "Inverse temperature for gibbs");
  c_conv->add_option("--out", conv.out, "CSV output path (default stdout)");
  c_conv->add_flag("--emit-config", conv.emit_config,
                   "Write the normalized model config and exit");

  birqi::cli::EffectiveHamiltonianArgs eff;
  CLI::App* c_eff = app.add_subcommand(
      "effective-hamiltonian",
      "Effective Hamiltonian of the limit dynamics, with the "
      "environment-created interaction part");
  c_eff->add_option("--config", eff.config, "Model config file or preset")
      ->capture_default_str();
  CLI::Option* eff_beta = c_eff->add_option(
      "--beta", eff.beta, "Gibbs ancilla at this inverse temperature");
  c_eff->add_flag("--json", eff.json_output, "Machine-readable output");
  c_eff->add_option("--out", eff.out, "Output path (default stdout)");
  c_eff->add_flag("--emit-config", eff.emit_config,
                  "Write the normalized model config and exit");

  birqi::cli::ThermalArgs thermal;
  CLI::App* c_thermal = app.add_subcommand(
      "thermal",
      "Distance-to-Gibbs decay and return-to-equilibrium verdict");
  c_thermal->add_option("--config", thermal.config, "Model config file or preset")
      ->capture_default_str();
  c_thermal->add_option("--beta", thermal.beta, "Inverse temperature (>= 0)")
      ->capture_default_str();
  c_thermal->add_option("--initial", thermal.initial,
                        "Initial state (default: highest basis state)");
  c_thermal->add_option("--t-max", thermal.t_max, "End of the time grid")
      ->capture_default_str();
  c_thermal->add_option("--dt", thermal.dt, "Grid spacing")
      ->capture_default_str();
  c_thermal->add_option("--out", thermal.out, "CSV output path (default stdout)");
  c_thermal->add_flag("--emit-config", thermal.emit_config,
                      "Write the normalized model config and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_curve->parsed()) {
      curve.has_beta = curve_beta->count() > 0;
      return birqi::cli::run_entanglement_curve(curve);
    }
    if (c_conv->parsed()) {
      conv.has_beta = conv_beta->count() > 0;
      return birqi::cli::run_convergence(conv);
    }
    if (c_eff->parsed()) {
      eff.has_beta = eff_beta->count() > 0;
      return birqi::cli::run_effective_hamiltonian(eff);
    }
    if (c_thermal->parsed()) return birqi::cli::run_thermal(thermal);
  } catch (const birqi::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const birqi::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
