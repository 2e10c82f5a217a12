#include "birqi/lindblad.hpp"

#include <cmath>
#include <stdexcept>

namespace birqi {

namespace {

// Jump operators S_j = V_j ⊗ I + I ⊗ W_j, j = 1 … N.
std::vector<Matrix> jump_operators(const BipartiteModel& m) {
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  std::vector<Matrix> s;
  s.reserve(static_cast<size_t>(m.couplings()));
  for (Eigen::Index j = 1; j < m.ancilla_dim; ++j)
    s.push_back(num::kron(m.V[j - 1], id_B) + num::kron(id_A, m.W[j - 1]));
  return s;
}

}  // namespace

EffectiveHamiltonian effective_hamiltonian(const BipartiteModel& m,
                                           const AncillaState& ancilla,
                                           InteractionOrder order) {
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  const Eigen::VectorXd w = ancilla.weights(m);
  const Complex half_i(0.0, 0.5);
  const double sign = order == InteractionOrder::AThenB ? 1.0 : -1.0;

  Matrix interaction = Matrix::Zero(m.dim_sys(), m.dim_sys());
  for (Eigen::Index j = 1; j < m.ancilla_dim; ++j) {
    const Matrix vw = num::kron(m.V[j - 1], Matrix(m.W[j - 1].adjoint()));
    interaction +=
        sign * half_i * (w(j) - w(0)) * (vw - Matrix(vw.adjoint()));
  }

  EffectiveHamiltonian eh;
  eh.interaction = std::move(interaction);
  eh.H_eff = num::kron(m.H_A, id_B) + num::kron(id_A, m.H_B) + eh.interaction;
  return eh;
}

Superoperator generator_for_ancilla(const BipartiteModel& m,
                                    const AncillaState& ancilla,
                                    InteractionOrder order) {
  const EffectiveHamiltonian eh = effective_hamiltonian(m, ancilla, order);
  const std::vector<Matrix> s = jump_operators(m);
  const Eigen::VectorXd w = ancilla.weights(m);
  const Complex i_unit(0.0, 1.0);

  std::vector<Matrix> down_gram, up_gram;  // S*S and SS* per coupling
  for (const Matrix& sj : s) {
    down_gram.push_back(sj.adjoint() * sj);
    up_gram.push_back(sj * sj.adjoint());
  }

  return Superoperator::from_map(m.dim_sys(), [&](const Matrix& rho) {
    Matrix out = -i_unit * (eh.H_eff * rho - rho * eh.H_eff);
    for (size_t j = 0; j < s.size(); ++j) {
      const double w0 = w(0);
      const double wj = w(static_cast<Eigen::Index>(j) + 1);
      if (w0 != 0.0)
        out += w0 * (s[j] * rho * s[j].adjoint() -
                     0.5 * (down_gram[j] * rho + rho * down_gram[j]));
      if (wj != 0.0)
        out += wj * (s[j].adjoint() * rho * s[j] -
                     0.5 * (up_gram[j] * rho + rho * up_gram[j]));
    }
    return out;
  });
}

Superoperator generator_vacuum(const BipartiteModel& m, InteractionOrder order) {
  return generator_for_ancilla(m, AncillaState::ground(), order);
}

Superoperator generator_thermal(const BipartiteModel& m, double beta,
                                InteractionOrder order) {
  return generator_for_ancilla(m, AncillaState::gibbs(beta), order);
}

LimitCoefficients limit_coefficients(const BipartiteModel& m,
                                     InteractionOrder order) {
  const Eigen::Index d = m.dim_sys();
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  const Matrix id = Matrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  const Matrix h_free = num::kron(m.H_A, id_B) + num::kron(id_A, m.H_B);

  LimitCoefficients lc;
  lc.L00 = -i_unit * (h_free + 2.0 * m.lambda(0) * id);
  for (Eigen::Index j = 1; j < m.ancilla_dim; ++j) {
    const Matrix va = num::kron(m.V[j - 1], id_B);
    const Matrix wb = num::kron(id_A, m.W[j - 1]);
    const Matrix cross = order == InteractionOrder::AThenB
                             ? Matrix(va * wb.adjoint())
                             : Matrix(va.adjoint() * wb);
    lc.L00 -= 0.5 * (va.adjoint() * va + wb.adjoint() * wb + 2.0 * cross);
    lc.L_from_0.push_back(-i_unit * (va + wb));
    lc.L_to_0.push_back(-i_unit * (va.adjoint() + wb.adjoint()));
  }
  return lc;
}

Superoperator generator_from_coefficients(const BipartiteModel& m,
                                          InteractionOrder order) {
  const LimitCoefficients lc = limit_coefficients(m, order);
  return Superoperator::from_map(m.dim_sys(), [&](const Matrix& rho) {
    Matrix out = lc.L00 * rho + rho * lc.L00.adjoint();
    for (const Matrix& l : lc.L_from_0) out += l * rho * l.adjoint();
    return out;
  });
}

Matrix evolve(const Superoperator& gen, const Matrix& rho0, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve: time must be nonnegative");
  if (rho0.rows() != gen.dim() || rho0.cols() != gen.dim())
    throw std::invalid_argument("evolve: state dimension mismatch");
  const num::Matrix propagator = num::expm(t * gen.matrix());
  return num::unvectorize(propagator * num::vectorize(rho0), gen.dim());
}

SpectrumReport spectrum(const Superoperator& gen, double kernel_tol) {
  SpectrumReport rep;
  Eigen::ComplexEigenSolver<num::Matrix> es(gen.matrix());
  rep.eigenvalues = es.eigenvalues();

  const num::Matrix kernel = num::nullspace(gen.matrix(), kernel_tol);
  rep.kernel_dimension = kernel.cols();
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    Matrix cand = num::unvectorize(kernel.col(k), gen.dim());
    // SVD kernel vectors carry an arbitrary phase; rotate so the trace is
    // real-positive before Hermitizing, otherwise (M + M*)/2 can cancel a
    // perfectly good state.
    const Complex tr = cand.trace();
    if (std::abs(tr) > 1e-14) cand *= std::conj(tr) / std::abs(tr);
    Matrix herm = 0.5 * (cand + cand.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> hes(herm);
    const double min_eig = hes.eigenvalues().minCoeff();
    const double trace = herm.trace().real();
    if (min_eig >= -1e-9 && trace > 1e-12) {
      rep.invariant_states.push_back(herm / trace);
    } else {
      rep.non_state_kernel.push_back(std::move(herm));
    }
  }
  return rep;
}

}  // namespace birqi
