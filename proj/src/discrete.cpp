#include "birqi/discrete.hpp"

#include <cmath>
#include <stdexcept>

namespace birqi {

Matrix step_unitary(const BipartiteModel& m, double h, InteractionOrder order) {
  if (h <= 0.0)
    throw std::invalid_argument("step_unitary: interaction duration h must be positive");
  const Complex mih(0.0, -h);
  const Matrix ua = num::expm(mih * h_tot_A(m, h));
  const Matrix ub = num::expm(mih * h_tot_B(m, h));
  return order == InteractionOrder::AThenB ? Matrix(ub * ua) : Matrix(ua * ub);
}

Matrix KrausBlocks::reassemble() const {
  Matrix u = Matrix::Zero(dim_sys * ancilla_dim, dim_sys * ancilla_dim);
  for (Eigen::Index i = 0; i < ancilla_dim; ++i)
    for (Eigen::Index j = 0; j < ancilla_dim; ++j)
      u += num::kron(blocks[i][j], ladder(i, j, ancilla_dim));
  return u;
}

KrausBlocks kraus_blocks(const Matrix& u, Eigen::Index dim_sys,
                         Eigen::Index ancilla_dim) {
  if (u.rows() != u.cols() || u.rows() != dim_sys * ancilla_dim)
    throw std::invalid_argument("kraus_blocks: unitary dimension does not match dims");
  KrausBlocks kb;
  kb.dim_sys = dim_sys;
  kb.ancilla_dim = ancilla_dim;
  kb.blocks.assign(ancilla_dim, std::vector<Matrix>(ancilla_dim));
  // The ancilla is the last tensor factor: global index s·(N+1) + r.
  for (Eigen::Index i = 0; i < ancilla_dim; ++i) {
    for (Eigen::Index j = 0; j < ancilla_dim; ++j) {
      Matrix b(dim_sys, dim_sys);
      for (Eigen::Index s = 0; s < dim_sys; ++s)
        for (Eigen::Index t = 0; t < dim_sys; ++t)
          b(s, t) = u(s * ancilla_dim + j, t * ancilla_dim + i);
      kb.blocks[i][j] = std::move(b);
    }
  }
  return kb;
}

KrausBlocks asymptotic_kraus(const BipartiteModel& m, double h,
                             InteractionOrder order) {
  if (h <= 0.0)
    throw std::invalid_argument("asymptotic_kraus: interaction duration h must be positive");
  const Eigen::Index d = m.dim_sys();
  const Eigen::Index r = m.ancilla_dim;
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  const Matrix id = Matrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  const double rh = std::sqrt(h);
  const Matrix h_free = num::kron(m.H_A, id_B) + num::kron(id_A, m.H_B);
  // The cross terms keep the order of the half-steps: the second half-step's
  // coupling stands to the left of the first's.
  const bool a_first = order == InteractionOrder::AThenB;

  KrausBlocks kb;
  kb.dim_sys = d;
  kb.ancilla_dim = r;
  kb.blocks.assign(r, std::vector<Matrix>(r));

  // Per-coupling extensions V_j ⊗ I and I ⊗ W_j and their adjoints.
  std::vector<Matrix> va(r), vad(r), wb(r), wbd(r);
  for (Eigen::Index j = 1; j < r; ++j) {
    va[j] = num::kron(m.V[j - 1], id_B);
    vad[j] = va[j].adjoint();
    wb[j] = num::kron(id_A, m.W[j - 1]);
    wbd[j] = wb[j].adjoint();
  }

  // Reference-level diagonal block: identity, free drift with the 2λ_0
  // constant as displayed, and the full dissipative sum.
  Matrix u00 = id - i_unit * h * (h_free + 2.0 * m.lambda(0) * id);
  for (Eigen::Index j = 1; j < r; ++j) {
    const Matrix cross = a_first ? Matrix(va[j] * wbd[j]) : Matrix(vad[j] * wb[j]);
    u00 -= 0.5 * h * (vad[j] * va[j] + wbd[j] * wb[j] + 2.0 * cross);
  }
  kb.blocks[0][0] = u00;

  for (Eigen::Index j = 1; j < r; ++j) {
    // Couplings between the reference level and level j at order √h.
    kb.blocks[j][0] = -i_unit * rh * (vad[j] + wbd[j]);
    kb.blocks[0][j] = -i_unit * rh * (va[j] + wb[j]);
    // Excited-level blocks at order h.
    for (Eigen::Index k = 1; k < r; ++k) {
      const Matrix cross =
          a_first ? Matrix(vad[j] * wb[k]) : Matrix(va[k] * wbd[j]);
      Matrix b = -0.5 * h * (va[k] * vad[j] + wb[k] * wbd[j] + 2.0 * cross);
      if (j == k)
        b += id - i_unit * h * (h_free + 2.0 * m.lambda(j) * id);
      kb.blocks[j][k] = std::move(b);
    }
  }
  return kb;
}

Superoperator channel(const BipartiteModel& m, double h,
                      const AncillaState& ancilla, InteractionOrder order) {
  const KrausBlocks kb = kraus_blocks(step_unitary(m, h, order), m.dim_sys(),
                                      m.ancilla_dim);
  const Eigen::VectorXd w = ancilla.weights(m);
  return Superoperator::from_map(m.dim_sys(), [&](const Matrix& rho) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (Eigen::Index k = 0; k < kb.ancilla_dim; ++k) {
      if (w(k) == 0.0) continue;
      for (Eigen::Index j = 0; j < kb.ancilla_dim; ++j)
        out += w(k) * (kb.blocks[k][j] * rho * kb.blocks[k][j].adjoint());
    }
    return out;
  });
}

Trajectory simulate(const BipartiteModel& m, double h, int steps,
                    const AncillaState& ancilla, const Matrix& rho0,
                    InteractionOrder order, double rho0_tol) {
  if (steps < 0) throw std::invalid_argument("simulate: steps must be >= 0");
  if (rho0.rows() != m.dim_sys() || rho0.cols() != m.dim_sys())
    throw std::invalid_argument("simulate: initial state must act on A x B");
  const double defect0 = num::density_defect(rho0);
  if (defect0 > rho0_tol)
    throw std::invalid_argument("simulate: initial state is not a density matrix");

  const Superoperator step = channel(m, h, ancilla, order);
  Trajectory traj;
  traj.states.reserve(static_cast<size_t>(steps) + 1);
  traj.states.push_back(rho0);
  traj.max_density_defect = defect0;
  Matrix rho = rho0;
  for (int n = 0; n < steps; ++n) {
    rho = step.apply(rho);
    traj.max_density_defect =
        std::max(traj.max_density_defect, num::density_defect(rho));
    traj.states.push_back(rho);
  }
  return traj;
}

}  // namespace birqi
