#include "birqi/superoperator.hpp"

#include <stdexcept>

namespace birqi {

Superoperator Superoperator::from_map(
    Eigen::Index dim, const std::function<num::Matrix(const num::Matrix&)>& map) {
  if (dim <= 0) throw std::invalid_argument("superoperator: dimension must be positive");
  Superoperator s;
  s.dim_ = dim;
  s.matrix_.resize(dim * dim, dim * dim);
  num::Matrix unit = num::Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      unit(i, j) = 1.0;
      s.matrix_.col(i * dim + j) = num::vectorize(map(unit));
      unit(i, j) = 0.0;
    }
  }
  return s;
}

Superoperator Superoperator::from_matrix(Eigen::Index dim, num::Matrix m) {
  if (dim <= 0) throw std::invalid_argument("superoperator: dimension must be positive");
  if (m.rows() != dim * dim || m.cols() != dim * dim)
    throw std::invalid_argument("superoperator: representation must be d^2 x d^2");
  Superoperator s;
  s.dim_ = dim;
  s.matrix_ = std::move(m);
  return s;
}

num::Matrix Superoperator::apply(const num::Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw std::invalid_argument("superoperator: argument dimension mismatch");
  return num::unvectorize(matrix_ * num::vectorize(rho), dim_);
}

num::Matrix Superoperator::choi() const {
  num::Matrix c = num::Matrix::Zero(dim_ * dim_, dim_ * dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    for (Eigen::Index j = 0; j < dim_; ++j) {
      const num::Matrix image = num::unvectorize(matrix_.col(i * dim_ + j), dim_);
      c.block(i * dim_, j * dim_, dim_, dim_) = image;
    }
  }
  return c;
}

}  // namespace birqi
