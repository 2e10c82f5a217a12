#pragma once
// discrete.hpp — exact discrete repeated-interaction dynamics: the step
// unitary U = U^B U^A on A ⊗ B ⊗ ancilla, its operator-valued Kraus block
// decomposition U = Σ_ij U^i_j ⊗ a^i_j, the reduced channel for a fresh
// ancilla in a given state, trajectory iteration, and the closed-form
// asymptotic blocks that the h → 0 limit is built from.

#include "birqi/model.hpp"
#include "birqi/superoperator.hpp"

#include <vector>

namespace birqi {

// The composed step applies the A half-step first, then B. The evolution
// keeps the memory of the order: swapping it flips the sign of the created
// interaction Hamiltonian in the limit.
enum class InteractionOrder { AThenB, BThenA };

// U = e^{-ih·H_tot_B} · e^{-ih·H_tot_A} (factors swapped for BThenA).
// Throws on h <= 0.
Matrix step_unitary(const BipartiteModel& m, double h,
                    InteractionOrder order = InteractionOrder::AThenB);

// Operator-valued blocks of a unitary on A ⊗ B ⊗ ancilla with respect to the
// ancilla basis: blocks[i][j] = (I ⊗ ⟨e_j|) U (I ⊗ |e_i⟩), so blocks[i][j]
// pairs with a^i_j in the reassembly sum. Column completeness
// Σ_j blocks[k][j]* blocks[k][j] = I expresses unitarity blockwise.
struct KrausBlocks {
  Eigen::Index dim_sys = 0;
  Eigen::Index ancilla_dim = 0;
  std::vector<std::vector<Matrix>> blocks;  // blocks[i][j], (N+1) × (N+1)

  // Σ_ij blocks[i][j] ⊗ a^i_j; reproduces the decomposed unitary exactly.
  Matrix reassemble() const;
};

KrausBlocks kraus_blocks(const Matrix& u, Eigen::Index dim_sys,
                         Eigen::Index ancilla_dim);

// The closed-form blocks of the step unitary up to O(h^{3/2}): identity plus
// drift on the diagonal, -i√h couplings between level 0 and level j, and
// O(h) cross terms between excited levels.
KrausBlocks asymptotic_kraus(const BipartiteModel& m, double h,
                             InteractionOrder order = InteractionOrder::AThenB);

// Reduced channel of one interaction step: ρ ↦ Tr_ancilla(U(ρ ⊗ ω)U*),
// assembled as Σ_{j,k} w_k · blocks[k][j] ρ blocks[k][j]* from the ancilla
// weights w. Completely positive and trace-preserving.
Superoperator channel(const BipartiteModel& m, double h,
                      const AncillaState& ancilla,
                      InteractionOrder order = InteractionOrder::AThenB);

// Repeated application of the channel. Every intermediate state is kept, and
// the worst deviation from a valid density matrix along the path is reported
// rather than silently corrected.
struct Trajectory {
  std::vector<Matrix> states;  // states[0] = ρ₀, states[n] after n steps
  double max_density_defect = 0.0;
};

// Throws std::invalid_argument if ρ₀ is not a valid density matrix on A ⊗ B
// (defect above `rho0_tol`).
Trajectory simulate(const BipartiteModel& m, double h, int steps,
                    const AncillaState& ancilla, const Matrix& rho0,
                    InteractionOrder order = InteractionOrder::AThenB,
                    double rho0_tol = 1e-9);

}  // namespace birqi
