#pragma once
// superoperator.hpp — linear maps on d×d matrices stored as d²×d² matrices in
// the row-major matrix-unit basis. Houses both Lindblad generators and
// discrete channels; exponentiation and spectral analysis reduce to ordinary
// dense matrix operations on the stored representation.

#include "birqi/numkernel.hpp"

#include <functional>

namespace birqi {

class Superoperator {
 public:
  Superoperator() = default;

  // Builds the matrix by applying `map` to each matrix unit E_ij; column
  // i·d + j of the representation is vec(map(E_ij)).
  static Superoperator from_map(
      Eigen::Index dim, const std::function<num::Matrix(const num::Matrix&)>& map);

  // Wraps an existing d²×d² representation. Throws on shape mismatch.
  static Superoperator from_matrix(Eigen::Index dim, num::Matrix m);

  num::Matrix apply(const num::Matrix& rho) const;

  Eigen::Index dim() const { return dim_; }
  const num::Matrix& matrix() const { return matrix_; }

  // Choi matrix Σ_ij E_ij ⊗ map(E_ij); the map is completely positive iff
  // this d²×d² matrix is positive semidefinite.
  num::Matrix choi() const;

 private:
  Eigen::Index dim_ = 0;
  num::Matrix matrix_;  // d² × d²
};

}  // namespace birqi
