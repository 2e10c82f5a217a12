#include "birqi/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace birqi {

using num::Complex;
using num::Matrix;

Matrix XState::matrix() const {
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = a;
  rho(1, 1) = b;
  rho(2, 2) = c;
  rho(3, 3) = d;
  rho(0, 3) = y;
  rho(3, 0) = std::conj(y);
  rho(1, 2) = x;
  rho(2, 1) = std::conj(x);
  return rho;
}

XStateScan as_x_state(const Matrix& rho, double tol) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("as_x_state: expected a 4x4 two-qubit state");
  XStateScan scan;
  scan.state.a = rho(0, 0).real();
  scan.state.b = rho(1, 1).real();
  scan.state.c = rho(2, 2).real();
  scan.state.d = rho(3, 3).real();
  scan.state.x = rho(1, 2);
  scan.state.y = rho(0, 3);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const bool on_pattern = (i == j) || (i + j == 3);
      if (!on_pattern)
        scan.residual = std::max(scan.residual, std::abs(rho(i, j)));
    }
  }
  scan.ok = scan.residual <= tol;
  return scan;
}

double concurrence_x(const XState& s) {
  const double via_y = std::abs(s.y) - std::sqrt(std::max(0.0, s.b * s.c));
  const double via_x = std::abs(s.x) - std::sqrt(std::max(0.0, s.a * s.d));
  const double c = 2.0 * std::max({0.0, via_y, via_x});
  return std::min(1.0, c);
}

double concurrence_general(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("concurrence_general: expected a 4x4 two-qubit state");
  // σ_y ⊗ σ_y is real up to the overall sign pattern; the spin-flipped state
  // is (σ_y⊗σ_y) ρ̄ (σ_y⊗σ_y).
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(r);
  std::array<double, 4> mu{};
  for (Eigen::Index k = 0; k < 4; ++k)
    mu[static_cast<size_t>(k)] =
        std::sqrt(std::max(0.0, es.eigenvalues()(k).real()));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

namespace {

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace

double eof(double concurrence) {
  if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
    throw std::domain_error("eof: concurrence must lie in [0, 1]");
  const double c = std::clamp(concurrence, 0.0, 1.0);
  const double p = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(p);
}

num::Matrix closed_form_rho10(double t) {
  if (t < 0.0) throw std::invalid_argument("closed_form_rho10: time must be nonnegative");
  const double et = std::exp(-t);
  XState s;
  s.a = 1.0 - (1.0 + t * t) * et;
  s.b = t * t * et;
  s.c = et;
  s.d = 0.0;
  s.x = -t * et;
  return s.matrix();
}

num::Matrix closed_form_rho11(double t) {
  if (t < 0.0) throw std::invalid_argument("closed_form_rho11: time must be nonnegative");
  const double et = std::exp(-t);
  const double e2t = std::exp(-2.0 * t);
  XState s;
  s.a = 1.0 - (t * t - 4.0 * t + 6.0) * et + 5.0 * e2t;
  s.b = (t * t - 4.0 * t + 5.0) * et - 5.0 * e2t;
  s.c = et - e2t;
  s.d = e2t;
  s.x = (2.0 - t) * et - 2.0 * e2t;
  return s.matrix();
}

}  // namespace birqi
