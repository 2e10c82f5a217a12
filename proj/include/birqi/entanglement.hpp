#pragma once
// entanglement.hpp — two-qubit entanglement metrics: X-state detection,
// Wootters concurrence (closed form on X states and the general spin-flip
// construction), entanglement of formation, and the closed-form evolved
// states used as oracles for the semigroup dynamics.

#include "birqi/numkernel.hpp"

namespace birqi {

// A two-qubit state whose only nonzero entries sit on the diagonal and
// anti-diagonal of the product basis (e₀⊗e₀, e₀⊗e₁, e₁⊗e₀, e₁⊗e₁):
//   diag = (a, b, c, d), anti-diagonal coherences y (corners) and x (middle).
// Positivity requires |y|² ≤ ad and |x|² ≤ bc.
struct XState {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  num::Complex x{0.0, 0.0};
  num::Complex y{0.0, 0.0};

  num::Matrix matrix() const;
};

// Soft X-state classification: `ok` when every entry outside the X pattern
// has modulus ≤ tol; `residual` is the largest offending modulus (zero-ish
// when ok). The X-pattern fields are extracted either way.
struct XStateScan {
  bool ok = false;
  XState state;
  double residual = 0.0;
};

XStateScan as_x_state(const num::Matrix& rho, double tol = 1e-9);

// Closed-form concurrence of an X state: 2·max(0, |y|−√(bc), |x|−√(ad)).
double concurrence_x(const XState& s);

// Wootters construction for an arbitrary two-qubit density matrix:
// max(0, μ₁−μ₂−μ₃−μ₄) with μ_k the decreasing square roots of the
// eigenvalues of ρ(σ_y⊗σ_y)ρ̄(σ_y⊗σ_y) (clipped at zero before the roots).
double concurrence_general(const num::Matrix& rho);

// Entanglement of formation E = h((1+√(1−C²))/2) with h the binary entropy,
// endpoints defined by continuity. Throws std::domain_error if C is outside
// [0, 1] by more than 1e-12.
double eof(double concurrence);

// Exact e^{tL} evolutions of the emission model from two basis initial
// states, used as oracles for the generator machinery. Throw on t < 0.
//
// From |e₁⊗e₀⟩⟨e₁⊗e₀|: diag(1−(1+t²)e^{−t}, t²e^{−t}, e^{−t}, 0) with
// middle coherence x = −t e^{−t}.
num::Matrix closed_form_rho10(double t);

// From |e₁⊗e₁⟩⟨e₁⊗e₁|: populations
//   a = 1 − (t²−4t+6)e^{−t} + 5e^{−2t},  b = (t²−4t+5)e^{−t} − 5e^{−2t},
//   c = e^{−t} − e^{−2t},                d = e^{−2t},
// and middle coherence x = (2−t)e^{−t} − 2e^{−2t}, verified by substituting
// the whole family back into the generator (ρ̇ = L(ρ) holds entrywise; both
// middle off-diagonals are equal by Hermiticity).
num::Matrix closed_form_rho11(double t);

}  // namespace birqi
