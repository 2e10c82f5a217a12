#pragma once
// numkernel.hpp — dense complex linear-algebra primitives every other module
// builds on: Kronecker products, partial traces, matrix exponentials,
// Hermitian spectra, trace distance, SVD nullspaces, and the row-major
// matrix-unit vectorization used for superoperators.
//
// All dimensions in this project are tiny (system <= 16, superoperator
// <= 256), so everything is dense and direct; no iterative solvers.

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace birqi::num {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Kronecker product with the leftmost factor slowest:
//   (A ⊗ B)(i·rB + k, j·cB + l) = A(i, j) · B(k, l).
// Accepts any pair of Eigen expressions whose scalars multiply.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<
      typename DA::Scalar, typename DB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

// Trace over the factors NOT listed in `keep`. `dims` are the tensor factor
// dimensions, leftmost slowest (matching kron above); `keep` holds indices
// into `dims`, in increasing order. The kept factors retain their original
// relative order. Throws std::invalid_argument on dimension mismatch.
Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep);

// Matrix exponential. Dispatches on structure: Hermitian and anti-Hermitian
// inputs go through the spectral decomposition (exactly unitary results for
// e^{-ihH}); everything else through scaling-and-squaring Padé-13, which is
// the robust default for non-normal superoperator generators.
Matrix expm(const Matrix& a);

// The Padé path by itself, exposed so the two routes can be cross-checked.
Matrix expm_pade(const Matrix& a);

// Hermiticity test with an absolute tolerance scaled by max(1, |a|_max).
bool is_hermitian(const Matrix& a, double tol = 1e-10);

// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and the
// matching orthonormal eigenvector columns. Throws std::invalid_argument if
// the input is not Hermitian within 1e-10.
std::pair<Eigen::VectorXd, Matrix> herm_eig(const Matrix& h);

// Trace distance (1/2)·Σ|eig(ρ−σ)|. Throws on dimension mismatch.
double trace_distance(const Matrix& rho, const Matrix& sigma);

// Orthonormal basis of the numerical nullspace {v : |Av| <= tol·|A|·|v|},
// computed by SVD; the basis vectors are the columns of the returned matrix
// (possibly zero columns). A matrix with no rows has everything in its
// nullspace and yields the identity basis.
Matrix nullspace(const Matrix& a, double tol = 1e-9);

// Row-major matrix-unit vectorization: vec(M)(i·cols + j) = M(i, j).
// Superoperators are built entirely by applying maps to matrix units; no
// Kronecker vectorization identities are relied on anywhere.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Eigen::Index d);

// How far a matrix is from being a density matrix: the max of the
// Hermiticity residual, |trace − 1|, and the negative part of the lowest
// eigenvalue. Zero (to rounding) for valid states.
double density_defect(const Matrix& rho);

}  // namespace birqi::num
