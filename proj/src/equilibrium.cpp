#include "birqi/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

namespace birqi {

namespace {

// d²×d² matrix of the map X ↦ XS − SX in the row-major matrix-unit basis.
num::Matrix commutator_map(const Matrix& s) {
  const Eigen::Index d = s.rows();
  num::Matrix m(d * d, d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      m.col(i * d + j) = num::vectorize(unit * s - s * unit);
      unit(i, j) = 0.0;
    }
  }
  return m;
}

// Orthogonal projector onto the span of the (orthonormal) columns.
num::Matrix span_projector(const std::vector<Matrix>& basis, Eigen::Index d) {
  num::Matrix q(d * d, static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    q.col(static_cast<Eigen::Index>(k)) = num::vectorize(basis[k]);
  return q * q.adjoint();
}

std::vector<Matrix> jump_operators(const BipartiteModel& m) {
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  std::vector<Matrix> s;
  for (Eigen::Index j = 1; j < m.ancilla_dim; ++j)
    s.push_back(num::kron(m.V[j - 1], id_B) + num::kron(id_A, m.W[j - 1]));
  return s;
}

// Grow `ops` with iterated commutators [h, ·] until the span stops growing
// (each new element is normalized — only the span matters for commutants).
std::vector<Matrix> saturate_under_h(const Matrix& h,
                                     const std::vector<Matrix>& ops,
                                     Eigen::Index d) {
  num::Matrix span(d * d, 0);
  const auto grows_span = [&](const Matrix& x) {
    num::Vector v = num::vectorize(x);
    const double scale = v.norm();
    if (scale < 1e-14) return false;
    v -= span * (span.adjoint() * v);
    v -= span * (span.adjoint() * v);  // second pass for orthogonality
    if (v.norm() <= 1e-9 * scale) return false;
    span.conservativeResize(Eigen::NoChange, span.cols() + 1);
    span.col(span.cols() - 1) = v / v.norm();
    return true;
  };

  std::vector<Matrix> all, frontier;
  for (const Matrix& s : ops)
    if (grows_span(s)) {
      all.push_back(s / s.norm());
      frontier.push_back(all.back());
    }
  while (!frontier.empty() && span.cols() < d * d) {
    std::vector<Matrix> next;
    for (const Matrix& x : frontier) {
      Matrix c = h * x - x * h;
      if (grows_span(c)) {
        all.push_back(c / c.norm());
        next.push_back(all.back());
      }
    }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

CommutantReport commutant(const std::vector<Matrix>& ops, Eigen::Index d) {
  for (const Matrix& s : ops)
    if (s.rows() != d || s.cols() != d)
      throw std::invalid_argument("commutant: every operator must be d x d");

  num::Matrix stacked(static_cast<Eigen::Index>(ops.size()) * d * d, d * d);
  for (size_t k = 0; k < ops.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        commutator_map(ops[k]);

  const num::Matrix basis_vecs = num::nullspace(stacked, 1e-9);
  CommutantReport rep;
  rep.dimension = basis_vecs.cols();
  for (Eigen::Index k = 0; k < basis_vecs.cols(); ++k)
    rep.basis.push_back(num::unvectorize(basis_vecs.col(k), d));
  if (rep.dimension == 1) {
    const Matrix& b = rep.basis.front();
    const Matrix deviation =
        b - (b.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    rep.is_trivial = deviation.norm() <= 1e-9 * std::max(1.0, b.norm());
  }
  return rep;
}

EquilibriumReport return_to_equilibrium_check(const BipartiteModel& m,
                                              double beta) {
  const Eigen::Index d = m.dim_sys();
  const std::vector<Matrix> s = jump_operators(m);
  const Matrix h_eff =
      effective_hamiltonian(m, AncillaState::gibbs(beta)).H_eff;

  std::vector<Matrix> jumps;
  double max_norm = 0.0;
  for (const Matrix& sj : s) {
    jumps.push_back(sj);
    jumps.push_back(sj.adjoint());
    max_norm = std::max(max_norm, sj.norm());
  }
  std::vector<Matrix> with_h = jumps;
  with_h.insert(with_h.begin(), h_eff);

  EquilibriumReport rep;
  rep.has_dissipation = max_norm > 1e-12;
  rep.commutant_jumps = commutant(jumps, d);
  rep.commutant_with_h = commutant(with_h, d);
  rep.commutant_df = commutant(saturate_under_h(h_eff, jumps, d), d);

  const num::Matrix p_fixed = span_projector(rep.commutant_with_h.basis, d);
  rep.projector_distance =
      (span_projector(rep.commutant_df.basis, d) - p_fixed).norm();
  rep.jumps_vs_h_distance =
      (span_projector(rep.commutant_jumps.basis, d) - p_fixed).norm();

  const SpectrumReport spec = spectrum(generator_thermal(m, beta));
  rep.kernel_dimension = spec.kernel_dimension;
  for (const Matrix& state : spec.invariant_states) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(state);
    if (es.eigenvalues().minCoeff() > 1e-10) {
      rep.faithful_invariant = true;
      break;
    }
  }

  rep.criterion_satisfied = rep.has_dissipation && rep.faithful_invariant &&
                            rep.projector_distance <= 1e-8 &&
                            rep.commutant_with_h.is_trivial;
  return rep;
}

std::string verdict_line(const EquilibriumReport& rep) {
  if (!rep.has_dissipation) return "criterion inconclusive (no dissipation)";
  if (rep.criterion_satisfied) return "criterion satisfied";
  return "criterion inconclusive";
}

Matrix invariant_gibbs(const BipartiteModel& m, double beta) {
  if (beta < 0.0)
    throw std::invalid_argument("invariant_gibbs: beta must be >= 0");
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  const Matrix h_free = num::kron(m.H_A, id_B) + num::kron(id_A, m.H_B);
  const auto [eigs, vecs] = num::herm_eig(h_free);
  // Shift by the ground energy so large β stays finite.
  const Eigen::VectorXd w =
      ((-beta) * (eigs.array() - eigs.minCoeff())).exp();
  const Matrix rho =
      vecs * (w / w.sum()).cast<Complex>().asDiagonal() * vecs.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

double spectral_gap(const Eigen::VectorXcd& eigenvalues, double zero_tol) {
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
  double max_re = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    if (std::abs(eigenvalues(k)) <= zero_tol * scale) continue;
    max_re = std::max(max_re, eigenvalues(k).real());
  }
  return std::isfinite(max_re) ? -max_re : 0.0;
}

DecayTable convergence_study(const BipartiteModel& m, double beta,
                             const Matrix& rho0,
                             const std::vector<double>& t_grid) {
  const Superoperator gen = generator_thermal(m, beta);
  const Matrix target = invariant_gibbs(m, beta);

  DecayTable table;
  table.t = t_grid;
  table.distance.reserve(t_grid.size());
  for (double t : t_grid)
    table.distance.push_back(num::trace_distance(evolve(gen, rho0, t), target));

  table.spectral_gap = spectral_gap(spectrum(gen).eigenvalues);

  // Least squares on log distance over the fit window.
  std::vector<double> ts, ys;
  for (size_t k = 0; k < table.distance.size(); ++k) {
    if (table.distance[k] >= 1e-8 && table.distance[k] <= 1e-2) {
      ts.push_back(table.t[k]);
      ys.push_back(std::log(table.distance[k]));
    }
  }
  if (ts.size() >= 2) {
    const double n = static_cast<double>(ts.size());
    double mean_t = 0.0, mean_y = 0.0;
    for (size_t k = 0; k < ts.size(); ++k) {
      mean_t += ts[k];
      mean_y += ys[k];
    }
    mean_t /= n;
    mean_y /= n;
    double num = 0.0, den = 0.0;
    for (size_t k = 0; k < ts.size(); ++k) {
      num += (ts[k] - mean_t) * (ys[k] - mean_y);
      den += (ts[k] - mean_t) * (ts[k] - mean_t);
    }
    if (den > 0.0) {
      table.fitted_rate = -num / den;
      table.fit_ok = true;
    }
  }
  return table;
}

}  // namespace birqi
