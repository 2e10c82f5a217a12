#include "birqi/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "birqi/config.hpp"
#include "birqi/discrete.hpp"
#include "birqi/entanglement.hpp"
#include "birqi/equilibrium.hpp"
#include "birqi/lindblad.hpp"
#include "birqi/model.hpp"

namespace birqi::cli {

namespace {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("config: cannot open output file '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ConfigError("config: failed writing output file '" + path + "'");
}

BipartiteModel load_with_warnings(const std::string& spec) {
  BipartiteModel m = config::load_model_config(spec);
  for (const std::string& w : m.warnings()) std::cerr << "warning: " << w << "\n";
  return m;
}

// Shared --emit-config behavior: write the normalized model document and
// signal the caller to exit 0 without running the command.
bool emitted_config(const BipartiteModel& m, bool emit, const std::string& out) {
  if (!emit) return false;
  write_text(out, config::model_to_json(m).dump(2) + "\n");
  return true;
}

AncillaState resolve_ancilla(const std::string& name, bool has_beta,
                             double beta) {
  if (name == "ground") return AncillaState::ground();
  if (name == "gibbs") {
    if (!has_beta)
      throw ConfigError("config: --ancilla gibbs requires --beta");
    if (beta < 0.0) throw ConfigError("config: --beta must be >= 0");
    return AncillaState::gibbs(beta);
  }
  throw ConfigError("config: unknown ancilla spec '" + name +
                    "' (expected ground or gibbs)");
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(t_max > 0.0) || !(dt > 0.0))
    throw ConfigError("config: --t-max and --dt must be positive");
  const double count = std::floor(t_max / dt + 1e-9);
  if (count > 2e7) throw ConfigError("config: time grid has too many points");
  std::vector<double> grid;
  const long n = static_cast<long>(count);
  grid.reserve(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) grid.push_back(static_cast<double>(i) * dt);
  return grid;
}

Matrix resolve_initial(const std::string& spec, const BipartiteModel& m,
                       double tol) {
  if (spec.empty()) return config::default_initial_state(m);
  return config::parse_initial_state(spec, m, tol);
}

}  // namespace

int run_entanglement_curve(const EntanglementCurveArgs& args) {
  const BipartiteModel m = load_with_warnings(args.config);
  if (emitted_config(m, args.emit_config, args.out)) return 0;

  if (m.dim_A != 2 || m.dim_B != 2)
    throw ConfigError(
        "config: entanglement-curve requires a two-qubit system (dim_A = "
        "dim_B = 2), got " +
        std::to_string(m.dim_A) + " x " + std::to_string(m.dim_B));
  if (args.initial.empty())
    throw ConfigError("config: entanglement-curve requires --initial");

  const double tol = config::validation_tolerance();
  const Matrix rho0 = config::parse_initial_state(args.initial, m, tol);
  const AncillaState ancilla =
      resolve_ancilla(args.ancilla, args.has_beta, args.beta);
  const Superoperator gen = generator_for_ancilla(m, ancilla);

  std::string csv = "t,concurrence,eof,pop_00,pop_01,pop_10,pop_11,x_residual\n";
  for (double t : time_grid(args.t_max, args.dt)) {
    const Matrix rho = evolve(gen, rho0, t);
    const double defect = num::density_defect(rho);
    if (defect > tol)
      throw ValidationError("validation: state at t = " + fmt_g(t) +
                            " has density defect " + fmt_g(defect) +
                            " > tolerance " + fmt_g(tol));
    // On an X state the closed-form concurrence is far better conditioned
    // than the spectral one (which square-roots eigenvalue noise on the
    // degenerate blocks these curves produce), so prefer it when it applies.
    const XStateScan scan = as_x_state(rho, tol);
    const double c =
        scan.ok ? concurrence_x(scan.state) : concurrence_general(rho);
    csv += fmt_g(t);
    csv += ',' + fmt_g(c);
    csv += ',' + fmt_g(eof(c));
    for (int k = 0; k < 4; ++k) csv += ',' + fmt_g(rho(k, k).real());
    csv += ',' + fmt_g(scan.residual);
    csv += '\n';
  }
  write_text(args.out, csv);
  return 0;
}

int run_convergence(const ConvergenceArgs& args) {
  const BipartiteModel m = load_with_warnings(args.config);
  if (emitted_config(m, args.emit_config, args.out)) return 0;

  if (args.h_list.empty())
    throw ConfigError("config: --h needs at least one step size");
  for (size_t k = 0; k < args.h_list.size(); ++k) {
    if (!(args.h_list[k] > 0.0))
      throw ConfigError("config: step sizes must be positive");
    if (k > 0 && !(args.h_list[k] < args.h_list[k - 1]))
      throw ConfigError("config: step sizes must be strictly decreasing");
  }
  if (!(args.t_max > 0.0)) throw ConfigError("config: --t-max must be positive");

  const double tol = config::validation_tolerance();
  const Matrix rho0 = resolve_initial(args.initial, m, tol);
  const AncillaState ancilla =
      resolve_ancilla(args.ancilla, args.has_beta, args.beta);
  const Superoperator gen = generator_for_ancilla(m, ancilla);
  const Matrix target = evolve(gen, rho0, args.t_max);

  std::string csv = "h,steps,trace_distance,observed_order\n";
  double prev_h = 0.0, prev_d = 0.0;
  for (size_t k = 0; k < args.h_list.size(); ++k) {
    const double h = args.h_list[k];
    const auto steps = static_cast<long long>(std::floor(args.t_max / h + 1e-9));
    const Trajectory traj = simulate(m, h, steps, ancilla, rho0);
    if (traj.max_density_defect > tol)
      throw ValidationError("validation: discrete state at h = " + fmt_g(h) +
                            " has density defect " +
                            fmt_g(traj.max_density_defect) + " > tolerance " +
                            fmt_g(tol));
    const double d = num::trace_distance(traj.states.back(), target);
    csv += fmt_g(h);
    csv += ',' + std::to_string(steps);
    csv += ',' + fmt_g(d);
    csv += ',';
    if (k > 0 && d > 0.0 && prev_d > 0.0)
      csv += fmt_g(std::log(prev_d / d) / std::log(prev_h / h));
    csv += '\n';
    prev_h = h;
    prev_d = d;
  }
  write_text(args.out, csv);
  return 0;
}

int run_effective_hamiltonian(const EffectiveHamiltonianArgs& args) {
  const BipartiteModel m = load_with_warnings(args.config);
  if (emitted_config(m, args.emit_config, args.out)) return 0;

  if (args.has_beta && args.beta < 0.0)
    throw ConfigError("config: --beta must be >= 0");
  const AncillaState ancilla =
      args.has_beta ? AncillaState::gibbs(args.beta) : AncillaState::ground();
  const EffectiveHamiltonian eh = effective_hamiltonian(m, ancilla);

  std::string text;
  if (args.json_output) {
    nlohmann::json doc;
    doc["dim_A"] = m.dim_A;
    doc["dim_B"] = m.dim_B;
    doc["ancilla"] = args.has_beta ? "gibbs" : "ground";
    if (args.has_beta) doc["beta"] = args.beta;
    doc["H_eff"] = config::matrix_to_json(eh.H_eff);
    doc["interaction"] = config::matrix_to_json(eh.interaction);
    text = doc.dump(2) + "\n";
  } else {
    const auto dump = [](const std::string& label, const Matrix& h) {
      std::string s = label + " (" + std::to_string(h.rows()) + " x " +
                      std::to_string(h.cols()) + "):\n";
      for (Eigen::Index r = 0; r < h.rows(); ++r) {
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
          if (c > 0) s += "  ";
          s += fmt_complex(h(r, c));
        }
        s += '\n';
      }
      return s;
    };
    text = dump("H_eff", eh.H_eff) + "\n" + dump("interaction", eh.interaction);
  }
  write_text(args.out, text);
  return 0;
}

int run_thermal(const ThermalArgs& args) {
  const BipartiteModel m = load_with_warnings(args.config);
  if (emitted_config(m, args.emit_config, args.out)) return 0;

  if (args.beta < 0.0) throw ConfigError("config: --beta must be >= 0");
  const double tol = config::validation_tolerance();
  const Matrix rho0 = resolve_initial(args.initial, m, tol);

  const EquilibriumReport rep = return_to_equilibrium_check(m, args.beta);
  const Matrix rho_beta = invariant_gibbs(m, args.beta);
  const double residual =
      generator_thermal(m, args.beta).apply(rho_beta).norm();
  const DecayTable table =
      convergence_study(m, args.beta, rho0, time_grid(args.t_max, args.dt));

  std::string csv = "t,trace_distance_to_gibbs\n";
  for (size_t k = 0; k < table.t.size(); ++k)
    csv += fmt_g(table.t[k]) + "," + fmt_g(table.distance[k]) + "\n";
  write_text(args.out, csv);

  char verdict[256];
  std::snprintf(verdict, sizeof verdict,
                "verdict: %s; invariant residual %.6g; spectral gap %.6g; "
                "fitted rate %s\n",
                verdict_line(rep).c_str(), residual, table.spectral_gap,
                table.fit_ok ? fmt_g(table.fitted_rate).c_str() : "n/a");
  std::fputs(verdict, stdout);
  std::fflush(stdout);
  return 0;
}

}  // namespace birqi::cli
