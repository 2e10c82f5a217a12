#include "birqi/numkernel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace birqi::num {

namespace {

// Factor index of `index` along factor `k` for row-major composition.
Eigen::Index factor_index(Eigen::Index index,
                          const std::vector<Eigen::Index>& dims, int k) {
  Eigen::Index stride = 1;
  for (int l = static_cast<int>(dims.size()) - 1; l > k; --l) stride *= dims[l];
  return (index / stride) % dims[k];
}

}  // namespace

Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep) {
  Eigen::Index total = 1;
  for (auto d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (m.rows() != m.cols() || m.rows() != total)
    throw std::invalid_argument("partial_trace: matrix dimension does not match the factor list");

  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw std::invalid_argument("partial_trace: keep index out of range");
    kept[static_cast<size_t>(k)] = true;
  }

  Eigen::Index dim_keep = 1;
  for (size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) dim_keep *= dims[k];

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  const int nfac = static_cast<int>(dims.size());
  for (Eigen::Index r = 0; r < total; ++r) {
    for (Eigen::Index c = 0; c < total; ++c) {
      bool diagonal_in_traced = true;
      Eigen::Index kr = 0, kc = 0;
      for (int k = 0; k < nfac; ++k) {
        const Eigen::Index ir = factor_index(r, dims, k);
        const Eigen::Index ic = factor_index(c, dims, k);
        if (kept[static_cast<size_t>(k)]) {
          kr = kr * dims[k] + ir;
          kc = kc * dims[k] + ic;
        } else if (ir != ic) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (diagonal_in_traced) out(kr, kc) += m(r, c);
    }
  }
  return out;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Matrix expm_pade(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("expm: matrix must be square");
  return a.exp();  // scaling-and-squaring with Padé-13
}

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("expm: matrix must be square");
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    return es.eigenvectors() *
           es.eigenvalues().array().exp().matrix().asDiagonal() *
           es.eigenvectors().adjoint();
  }
  // Anti-Hermitian input a = -iH exponentiates to an exactly unitary
  // V e^{-iλ} V*, which keeps repeated-interaction steps unitary to rounding.
  const Matrix ia = Complex(0.0, 1.0) * a;
  if (is_hermitian(ia)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(ia);
    Vector phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
      phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  return expm_pade(a);
}

std::pair<Eigen::VectorXd, Matrix> herm_eig(const Matrix& h) {
  if (!is_hermitian(h))
    throw std::invalid_argument("herm_eig: input is not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  const Matrix diff = rho - sigma;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (diff + diff.adjoint()));
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Matrix nullspace(const Matrix& a, double tol) {
  if (tol <= 0) throw std::invalid_argument("nullspace: tolerance must be positive");
  if (a.rows() == 0) return Matrix::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0)
    return Matrix::Identity(a.cols(), a.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * sv(0)) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

Vector vectorize(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Matrix unvectorize(const Vector& v, Eigen::Index d) {
  if (v.size() != d * d)
    throw std::invalid_argument("unvectorize: vector length is not d*d");
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  return m;
}

double density_defect(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density_defect: matrix must be square");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  const double neg = std::max(0.0, -es.eigenvalues().minCoeff());
  return std::max({herm, trace_dev, neg});
}

}  // namespace birqi::num
