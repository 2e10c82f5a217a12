#pragma once
// lindblad.hpp — the h → 0 limit of the repeated-interaction dynamics: the
// environment-created effective interaction Hamiltonian, the limiting GKSL
// generators for ground and Gibbs ancillas, an independent construction from
// the limit coefficients of the step unitary, exact semigroup evolution, and
// spectral analysis of generators.

#include "birqi/discrete.hpp"
#include "birqi/model.hpp"
#include "birqi/superoperator.hpp"

#include <vector>

namespace birqi {

// H_eff = H_A⊗I + I⊗H_B + interaction, with the created interaction term
//   (i/2) Σ_j (w_j − w_0)(V_j ⊗ W_j* − V_j* ⊗ W_j)
// for ancilla weights w (ground: w = (1, 0, …), giving
// (i/2) Σ_j (V_j*⊗W_j − V_j⊗W_j*)). Both parts are Hermitian; constant
// multiples of the identity are excluded by convention.
struct EffectiveHamiltonian {
  Matrix H_eff;
  Matrix interaction;
};

EffectiveHamiltonian effective_hamiltonian(
    const BipartiteModel& m, const AncillaState& ancilla,
    InteractionOrder order = InteractionOrder::AThenB);

// GKSL generator for an arbitrary diagonal ancilla state with weights w:
//   L(ρ) = −i[H_eff(w), ρ]
//          + Σ_j w_0 (S_j ρ S_j* − ½{S_j*S_j, ρ})
//          + Σ_j w_j (S_j* ρ S_j − ½{S_jS_j*, ρ}),   S_j = V_j⊗I + I⊗W_j.
Superoperator generator_for_ancilla(
    const BipartiteModel& m, const AncillaState& ancilla,
    InteractionOrder order = InteractionOrder::AThenB);

// Ground-ancilla limit: L(ρ) = −i[H_eff, ρ] + Σ_j (S_jρS_j* − ½{S_j*S_j, ρ}).
Superoperator generator_vacuum(const BipartiteModel& m,
                               InteractionOrder order = InteractionOrder::AThenB);

// Gibbs-ancilla limit at inverse temperature β ≥ 0 (throws on β < 0).
// Reduces to generator_vacuum when the Gibbs weights degenerate to (1, 0, …),
// i.e. for large β when λ_0 is the minimal ancilla eigenvalue.
Superoperator generator_thermal(const BipartiteModel& m, double beta,
                                InteractionOrder order = InteractionOrder::AThenB);

// The h → 0 limits of the asymptotic Kraus blocks: (U⁰₀ − I)/h, U^j₀/√h and
// U⁰_j/√h. L00 keeps the 2λ_0 identity drift exactly as displayed; it cancels
// in the assembled generator.
struct LimitCoefficients {
  Matrix L00;
  std::vector<Matrix> L_from_0;  // L⁰_j = −i(V_j⊗I + I⊗W_j), j = 1…N
  std::vector<Matrix> L_to_0;    // L^j₀ = −i(V_j*⊗I + I⊗W_j*)
};

LimitCoefficients limit_coefficients(
    const BipartiteModel& m, InteractionOrder order = InteractionOrder::AThenB);

// Independent construction of the ground-ancilla generator straight from the
// limit coefficients: L(ρ) = L00 ρ + ρ L00* + Σ_j L⁰_j ρ (L⁰_j)*. Used as a
// cross-check against generator_vacuum; the two agree to rounding.
Superoperator generator_from_coefficients(
    const BipartiteModel& m, InteractionOrder order = InteractionOrder::AThenB);

// Exact semigroup evolution e^{tL}(ρ₀) via superoperator exponentiation
// (no ODE stepping; d² ≤ 256 makes the exponential exact and cheap).
// Throws on t < 0.
Matrix evolve(const Superoperator& gen, const Matrix& rho0, double t);

// Spectral analysis of a generator: all d² eigenvalues, plus the kernel
// split into reconstructed invariant states (kernel vectors phase-fixed,
// Hermitized, positivity-checked, trace-normalized) and Hermitized kernel
// elements that fail the positivity or normalization check. For a valid
// Lindbladian every nonzero eigenvalue has Re ≤ 0 (to rounding) and the
// kernel holds at least one state.
struct SpectrumReport {
  Eigen::VectorXcd eigenvalues;
  std::vector<Matrix> invariant_states;
  std::vector<Matrix> non_state_kernel;
  Eigen::Index kernel_dimension = 0;
};

SpectrumReport spectrum(const Superoperator& gen, double kernel_tol = 1e-9);

}  // namespace birqi
