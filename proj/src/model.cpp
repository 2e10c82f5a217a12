#include "birqi/model.hpp"

#include <cmath>
#include <stdexcept>

namespace birqi {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

void BipartiteModel::validate() const {
  require(dim_A >= 1, "model: dim_A must be at least 1");
  require(dim_B >= 1, "model: dim_B must be at least 1");
  require(ancilla_dim >= 2, "model: ancilla_dim must be at least 2");
  require(H_A.rows() == dim_A && H_A.cols() == dim_A,
          "model: H_A must be dim_A x dim_A");
  require(H_B.rows() == dim_B && H_B.cols() == dim_B,
          "model: H_B must be dim_B x dim_B");
  require(num::is_hermitian(H_A), "model: H_A is not Hermitian within 1e-10");
  require(num::is_hermitian(H_B), "model: H_B is not Hermitian within 1e-10");
  require(lambda.size() == ancilla_dim,
          "model: lambda must list one eigenvalue per ancilla level");
  require(static_cast<Eigen::Index>(V.size()) == ancilla_dim - 1,
          "model: V must hold ancilla_dim - 1 operators");
  require(static_cast<Eigen::Index>(W.size()) == ancilla_dim - 1,
          "model: W must hold ancilla_dim - 1 operators");
  for (size_t j = 0; j < V.size(); ++j) {
    require(V[j].rows() == dim_A && V[j].cols() == dim_A,
            "model: V[" + std::to_string(j + 1) + "] must be dim_A x dim_A");
    require(W[j].rows() == dim_B && W[j].cols() == dim_B,
            "model: W[" + std::to_string(j + 1) + "] must be dim_B x dim_B");
  }
}

std::vector<std::string> BipartiteModel::warnings() const {
  std::vector<std::string> out;
  if (lambda.size() > 0 && lambda(0) > lambda.minCoeff() + 1e-12) {
    out.push_back(
        "lambda_0 is not the minimal ancilla eigenvalue; a Gibbs ancilla "
        "concentrates on the minimal level at low temperature, not on e_0");
  }
  return out;
}

AncillaState AncillaState::ground() { return AncillaState{}; }

AncillaState AncillaState::gibbs(double beta) {
  if (beta < 0.0)
    throw std::invalid_argument("ancilla: inverse temperature beta must be >= 0");
  AncillaState s;
  s.kind_ = Kind::Gibbs;
  s.beta_ = beta;
  return s;
}

AncillaState AncillaState::with_weights(Eigen::VectorXd w) {
  AncillaState s;
  s.kind_ = Kind::Weights;
  s.weights_ = std::move(w);
  return s;
}

Eigen::VectorXd AncillaState::weights(const BipartiteModel& m) const {
  switch (kind_) {
    case Kind::Ground: {
      Eigen::VectorXd w = Eigen::VectorXd::Zero(m.ancilla_dim);
      w(0) = 1.0;
      return w;
    }
    case Kind::Gibbs:
      return gibbs_weights(m.lambda, beta_);
    case Kind::Weights: {
      if (weights_.size() != m.ancilla_dim)
        throw std::invalid_argument("ancilla: weight list length must equal ancilla_dim");
      if (weights_.minCoeff() < 0.0)
        throw std::invalid_argument("ancilla: weights must be nonnegative");
      if (std::abs(weights_.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("ancilla: weights must sum to 1 within 1e-12");
      return weights_;
    }
  }
  throw std::logic_error("ancilla: unknown kind");
}

Matrix ladder(Eigen::Index i, Eigen::Index j, Eigen::Index dim) {
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    throw std::invalid_argument("ladder: index out of range");
  Matrix a = Matrix::Zero(dim, dim);
  a(j, i) = 1.0;  // maps e_i to e_j
  return a;
}

Eigen::VectorXd gibbs_weights(const Eigen::VectorXd& lambda, double beta) {
  if (beta < 0.0)
    throw std::invalid_argument("gibbs_weights: beta must be >= 0");
  // Shift so the largest exponent is 0: weights are invariant under
  // λ_j → λ_j + c, and e^{-β(λ_j - λ_min)} never overflows.
  const Eigen::VectorXd shifted =
      (-beta) * (lambda.array() - lambda.minCoeff()).matrix();
  const Eigen::VectorXd expw = shifted.array().exp();
  return expw / expw.sum();
}

Matrix h_ancilla(const BipartiteModel& m) {
  return m.lambda.cast<Complex>().asDiagonal();
}

namespace {

// Shared assembly for the two half-step Hamiltonians. `on_A` selects which
// party carries the coupling operators.
Matrix h_tot(const BipartiteModel& m, double h, bool on_A) {
  if (h <= 0.0)
    throw std::invalid_argument("h_tot: interaction duration h must be positive");
  const Matrix id_A = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix id_B = Matrix::Identity(m.dim_B, m.dim_B);
  const Matrix id_R = Matrix::Identity(m.ancilla_dim, m.ancilla_dim);

  Matrix free_part = on_A ? num::kron(num::kron(m.H_A, id_B), id_R)
                          : num::kron(num::kron(id_A, m.H_B), id_R);
  Matrix total = free_part + num::kron(num::kron(id_A, id_B), h_ancilla(m));

  const double scale = 1.0 / std::sqrt(h);
  for (Eigen::Index j = 1; j < m.ancilla_dim; ++j) {
    const Matrix& coupling = on_A ? m.V[j - 1] : m.W[j - 1];
    const Matrix up = on_A ? num::kron(coupling, id_B) : num::kron(id_A, coupling);
    const Matrix down =
        on_A ? num::kron(Matrix(coupling.adjoint()), id_B)
             : num::kron(id_A, Matrix(coupling.adjoint()));
    total += scale * (num::kron(up, ladder(0, j, m.ancilla_dim)) +
                      num::kron(down, ladder(j, 0, m.ancilla_dim)));
  }
  return total;
}

}  // namespace

Matrix h_tot_A(const BipartiteModel& m, double h) { return h_tot(m, h, true); }

Matrix h_tot_B(const BipartiteModel& m, double h) { return h_tot(m, h, false); }

Matrix ancilla_density(const AncillaState& s, const BipartiteModel& m) {
  return s.weights(m).cast<Complex>().asDiagonal();
}

BipartiteModel emission_model() {
  BipartiteModel m;
  m.dim_A = m.dim_B = m.ancilla_dim = 2;
  m.H_A = Matrix::Zero(2, 2);
  m.H_A(0, 0) = 1.0;
  m.H_A(1, 1) = -1.0;
  m.H_B = m.H_A;
  m.lambda = Eigen::VectorXd(2);
  m.lambda << 1.0, -1.0;
  m.V = {ladder(1, 0, 2)};
  m.W = {ladder(1, 0, 2)};
  return m;
}

BipartiteModel thermal_chain_model(int n) {
  if (n < 1)
    throw std::invalid_argument("thermal_chain_model: need at least one coupling");
  BipartiteModel m;
  const Eigen::Index d = n + 1;
  m.dim_A = m.dim_B = m.ancilla_dim = d;
  m.lambda = Eigen::VectorXd(d);
  for (Eigen::Index j = 0; j < d; ++j)
    m.lambda(j) = 1.0 - 2.0 * static_cast<double>(j) / n;
  m.H_A = m.lambda.cast<Complex>().asDiagonal();
  m.H_B = m.H_A;
  for (Eigen::Index j = 1; j < d; ++j) {
    m.V.push_back(ladder(j, 0, d));
    m.W.push_back(ladder(j, 0, d));
  }
  return m;
}

}  // namespace birqi
