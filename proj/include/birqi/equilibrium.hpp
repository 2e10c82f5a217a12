#pragma once
// equilibrium.hpp — numerical return-to-equilibrium diagnostics: commutants
// of operator families, the sufficient criterion comparing the commutant of
// the jump operators with and without the effective Hamiltonian, the
// invariant Gibbs state of the free dynamics, and exponential-decay fits
// against the spectral gap.

#include "birqi/lindblad.hpp"
#include "birqi/model.hpp"

#include <string>
#include <vector>

namespace birqi {

// Basis of {X : XS = SX for every S in ops}, computed as the nullspace of
// the stacked maps X ↦ XS − SX over the d²-dimensional matrix space. The
// basis is orthonormal in the Hilbert–Schmidt inner product. `is_trivial`
// means dimension 1 with the basis element proportional to the identity.
struct CommutantReport {
  Eigen::Index dimension = 0;
  std::vector<Matrix> basis;
  bool is_trivial = false;
};

CommutantReport commutant(const std::vector<Matrix>& ops, Eigen::Index d);

// Return-to-equilibrium criterion.  Three commutants are computed:
//
//   commutant_jumps   {S_k, S_k*}'
//   commutant_with_h  F = {H_eff(β), S_k, S_k*}'      (fixed-point algebra)
//   commutant_df      N = {δ_H^n(S_k), δ_H^n(S_k*)}'  (decoherence-free
//                     algebra: jumps plus their iterated commutators with
//                     H_eff, saturated)
//
// Always F ⊆ N.  Convergence of every initial state to the invariant one
// holds when a faithful invariant state exists, N equals F (projector
// distance of the subspaces — bases are gauge-dependent), and F is trivial
// (uniqueness).  Note that the jump commutant alone can overshoot: with
// exchange-symmetric couplings (V_j = W_j on identical parties) it contains
// the swap operator, which only the ordered-interaction term in H_eff
// removes, so jumps' = F can fail while the decisive equality N = F holds.
// The criterion is one-sided: when it fails, the verdict is "inconclusive",
// never a claim of non-return.  Faithfulness of the invariant state is a
// hypothesis and is reported separately, not folded in.
struct EquilibriumReport {
  bool criterion_satisfied = false;
  bool has_dissipation = false;       // some S_k is nonzero
  bool faithful_invariant = false;    // a kernel state with min eig > 1e-10
  CommutantReport commutant_jumps;    // {S_k, S_k*}'
  CommutantReport commutant_with_h;   // F = {H_eff(β), S_k, S_k*}'
  CommutantReport commutant_df;       // N, the decoherence-free algebra
  double projector_distance = 0.0;    // ‖P_N − P_F‖ (decides the criterion)
  double jumps_vs_h_distance = 0.0;   // ‖P_jumps' − P_F‖ (informational)
  Eigen::Index kernel_dimension = 0;
};

EquilibriumReport return_to_equilibrium_check(const BipartiteModel& m,
                                              double beta);

// One-line human verdict for the report ("criterion satisfied",
// "criterion inconclusive (no dissipation)", or "criterion inconclusive").
std::string verdict_line(const EquilibriumReport& rep);

// Gibbs state of the non-interacting free Hamiltonian on A ⊗ B:
// e^{−β(H_A⊗I + I⊗H_B)} / Z. Faithful for every finite β.
Matrix invariant_gibbs(const BipartiteModel& m, double beta);

// Trace distance to the invariant Gibbs state along the exact thermal
// evolution, plus the spectral gap (−max Re over nonzero eigenvalues) and a
// least-squares exponential decay rate fitted on the window where the
// distance lies in [1e−8, 1e−2] (avoiding both the transient and the
// floating-point floor). `fit_ok` is false when the window holds fewer than
// two points.
struct DecayTable {
  std::vector<double> t;
  std::vector<double> distance;
  double spectral_gap = 0.0;
  double fitted_rate = 0.0;
  bool fit_ok = false;
};

DecayTable convergence_study(const BipartiteModel& m, double beta,
                             const Matrix& rho0,
                             const std::vector<double>& t_grid);

// −max Re over eigenvalues that are nonzero at the given tolerance; 0 when
// every eigenvalue is in the kernel.
double spectral_gap(const Eigen::VectorXcd& eigenvalues, double zero_tol = 1e-9);

}  // namespace birqi
