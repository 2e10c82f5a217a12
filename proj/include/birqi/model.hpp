#pragma once
// model.hpp — the bipartite repeated-interaction model: two parties A and B
// that never interact directly, each coupled to the same (N+1)-level ancilla
// through ladder operators a^i_j, with the 1/√h coupling rescaling that
// produces a nontrivial h → 0 limit.

#include "birqi/numkernel.hpp"

#include <string>
#include <vector>

namespace birqi {

using num::Complex;
using num::Matrix;
using num::Vector;

// Static description of the model. The ancilla basis {e_0, …, e_N} is by
// construction the eigenbasis of its free Hamiltonian, so only the eigenvalue
// list `lambda` is stored — the ancilla Hamiltonian is always diagonal and a
// whole class of basis-mismatch bugs is ruled out. V[j-1] couples party A to
// ancilla level j; W[j-1] does the same for party B.
struct BipartiteModel {
  Eigen::Index dim_A = 0;
  Eigen::Index dim_B = 0;
  Eigen::Index ancilla_dim = 0;  // N + 1
  Matrix H_A;                    // Hermitian, dim_A × dim_A
  Matrix H_B;                    // Hermitian, dim_B × dim_B
  Eigen::VectorXd lambda;        // ancilla eigenvalues λ_0 … λ_N
  std::vector<Matrix> V;         // N operators on A
  std::vector<Matrix> W;         // N operators on B

  Eigen::Index dim_sys() const { return dim_A * dim_B; }
  Eigen::Index couplings() const { return ancilla_dim - 1; }

  // Structural checks (Hermiticity within 1e-10, shapes, list lengths).
  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  // Non-fatal guardrails. The basis convention labels e_0 "the reference
  // level" without requiring λ_0 = min λ_j; a warning flags models where it
  // is not minimal, since a Gibbs ancilla then does not concentrate on e_0
  // at low temperature.
  std::vector<std::string> warnings() const;
};

// State of each fresh ancilla copy: the pure reference level e_0, a Gibbs
// state at inverse temperature β, or explicit diagonal weights.
class AncillaState {
 public:
  enum class Kind { Ground, Gibbs, Weights };

  static AncillaState ground();
  static AncillaState gibbs(double beta);  // throws on β < 0
  static AncillaState with_weights(Eigen::VectorXd w);

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }

  // Diagonal weights β_j for the given model: (1, 0, …) for ground,
  // e^{-βλ_j}/Z for Gibbs. Throws std::invalid_argument if explicit weights
  // have the wrong length, are negative, or do not sum to 1 within 1e-12.
  Eigen::VectorXd weights(const BipartiteModel& m) const;

 private:
  Kind kind_ = Kind::Ground;
  double beta_ = 0.0;
  Eigen::VectorXd weights_;
};

// Ladder operator a^i_j with a^i_j e_k = δ_{ik} e_j; satisfies (a^i_j)* = a^j_i.
Matrix ladder(Eigen::Index i, Eigen::Index j, Eigen::Index dim);

// Gibbs weights e^{-βλ_j}/Z, computed with the spectrum shifted so the
// largest exponent is zero — stable for arbitrarily large β.
Eigen::VectorXd gibbs_weights(const Eigen::VectorXd& lambda, double beta);

// The diagonal ancilla Hamiltonian Σ_j λ_j a^j_j.
Matrix h_ancilla(const BipartiteModel& m);

// Total Hamiltonian of the A-side half-step on A ⊗ B ⊗ ancilla:
//   H_A⊗I⊗I + I⊗I⊗H_R + (1/√h) Σ_j (V_j⊗I⊗a^0_j + V_j*⊗I⊗a^j_0).
// Throws on h <= 0. Hermitian for every model and h.
Matrix h_tot_A(const BipartiteModel& m, double h);

// Mirror of h_tot_A with I⊗W_j acting on B and the free term I⊗H_B⊗I.
Matrix h_tot_B(const BipartiteModel& m, double h);

// Diagonal density matrix of the ancilla state in the H_R eigenbasis.
Matrix ancilla_density(const AncillaState& s, const BipartiteModel& m);

// Spontaneous-emission preset: every space is C², H_A = H_B = diag(1, -1),
// λ = (1, -1), and the single coupling V_1 = W_1 = a^1_0.
BipartiteModel emission_model();

// Thermalization chain preset with N couplings: every space is C^{N+1},
// H_A = H_B = H_R with spectrum λ_j = 1 - 2j/N (a uniform grid on [1, -1],
// reducing to the emission spectrum at N = 1), and V_j = W_j = a^j_0.
BipartiteModel thermal_chain_model(int n);

}  // namespace birqi
