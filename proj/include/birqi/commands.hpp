#pragma once
// commands.hpp — experiment commands behind the CLI.  Each run_* takes
// already-parsed arguments, performs the computation, writes CSV/text to
// --out (or stdout), and returns the process exit code.  Input problems
// throw ConfigError (exit 2); run-time numerical failures throw
// ValidationError (exit 3).  Output is deterministic: fixed 12-significant
// -digit formatting and "\n" line endings.

#include <string>
#include <vector>

#include "birqi/errors.hpp"

namespace birqi::cli {

// Concurrence / entanglement-of-formation curve of e^{tL}(rho0) on a
// two-qubit system.  CSV columns:
//   t,concurrence,eof,pop_00,pop_01,pop_10,pop_11,x_residual
struct EntanglementCurveArgs {
  std::string config = "emission";
  std::string initial;  // required: e<i>e<j> or a density-matrix file
  double t_max = 10.0;
  double dt = 0.05;
  std::string ancilla = "ground";
  double beta = 0.0;
  bool has_beta = false;
  std::string out;  // empty -> stdout
  bool emit_config = false;
};
int run_entanglement_curve(const EntanglementCurveArgs& args);

// Discrete repeated-interaction dynamics vs the limiting semigroup at a
// fixed time, over a list of step sizes.  CSV columns:
//   h,steps,trace_distance,observed_order
struct ConvergenceArgs {
  std::string config = "emission";
  std::string initial;  // empty -> highest basis state
  double t_max = 1.0;
  std::vector<double> h_list = {0.1, 0.05, 0.025, 0.0125};
  std::string ancilla = "ground";
  double beta = 0.0;
  bool has_beta = false;
  std::string out;
  bool emit_config = false;
};
int run_convergence(const ConvergenceArgs& args);

// Effective Hamiltonian dump (12 significant digits; --json for a
// machine-readable document).  With --beta the ancilla is the Gibbs state
// at that inverse temperature, otherwise the ground state.
struct EffectiveHamiltonianArgs {
  std::string config = "emission";
  double beta = 0.0;
  bool has_beta = false;
  bool json_output = false;
  std::string out;
  bool emit_config = false;
};
int run_effective_hamiltonian(const EffectiveHamiltonianArgs& args);

// Thermalization study: distance-to-Gibbs decay curve plus a verdict line
// (criterion result, invariant residual, spectral gap, fitted rate).
// CSV columns: t,trace_distance_to_gibbs
struct ThermalArgs {
  std::string config = "chain1";
  double beta = 1.0;
  std::string initial;  // empty -> highest basis state
  double t_max = 40.0;
  double dt = 0.5;
  std::string out;
  bool emit_config = false;
};
int run_thermal(const ThermalArgs& args);

}  // namespace birqi::cli
