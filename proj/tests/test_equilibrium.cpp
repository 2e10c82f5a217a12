// test_equilibrium.cpp — commutants, the return-to-equilibrium criterion,
// invariant Gibbs states, spectral gaps, and exponential decay fits.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "birqi/equilibrium.hpp"

using namespace birqi;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

// Hilbert-Schmidt distance from m to the span of an orthonormal basis.
double distance_to_span(const Matrix& m, const std::vector<Matrix>& basis) {
  Matrix residual = m;
  for (const Matrix& b : basis) residual -= hs_inner(b, m) * b;
  return residual.norm();
}

Matrix swap_two_qubits() {
  Matrix p = Matrix::Zero(4, 4);
  p(0, 0) = p(3, 3) = p(1, 2) = p(2, 1) = 1.0;
  return p;
}

Matrix pauli_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix pauli_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix random_unitary(std::mt19937& rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  return num::expm(Matrix(Complex(0, -1) * 0.5 * (m + m.adjoint())));
}

std::vector<Matrix> chain_jumps(const BipartiteModel& m) {
  std::vector<Matrix> ops;
  const Matrix ia = Matrix::Identity(m.dim_A, m.dim_A);
  const Matrix ib = Matrix::Identity(m.dim_B, m.dim_B);
  for (size_t j = 0; j < m.V.size(); ++j) {
    const Matrix s = num::kron(m.V[j], ib) + num::kron(ia, m.W[j]);
    ops.push_back(s);
    ops.push_back(s.adjoint());
  }
  return ops;
}

}  // namespace

TEST_CASE("commutants of operator families") {
  SUBCASE("no constraints and scalar constraints leave everything") {
    CHECK(commutant({}, 3).dimension == 9);
    CHECK(commutant({Matrix::Identity(3, 3)}, 3).dimension == 9);
  }

  SUBCASE("a nondegenerate diagonal pins the diagonal algebra") {
    const CommutantReport rep = commutant({pauli_z()}, 2);
    CHECK(rep.dimension == 2);
    CHECK_FALSE(rep.is_trivial);
    // both basis elements must themselves be diagonal
    for (const Matrix& b : rep.basis) {
      CHECK(std::abs(b(0, 1)) < 1e-12);
      CHECK(std::abs(b(1, 0)) < 1e-12);
    }
  }

  SUBCASE("an irreducible pair leaves only scalars") {
    const CommutantReport rep = commutant({pauli_z(), pauli_x()}, 2);
    CHECK(rep.dimension == 1);
    CHECK(rep.is_trivial);
  }

  SUBCASE("basis is orthonormal and always contains the identity direction") {
    const CommutantReport rep = commutant({pauli_z()}, 2);
    for (size_t i = 0; i < rep.basis.size(); ++i)
      for (size_t j = 0; j < rep.basis.size(); ++j)
        CHECK(std::abs(hs_inner(rep.basis[i], rep.basis[j]) -
                       (i == j ? 1.0 : 0.0)) < 1e-12);
    CHECK(distance_to_span(Matrix::Identity(2, 2), rep.basis) < 1e-9);
  }

  SUBCASE("symmetric-coupling jumps commute with the party exchange") {
    const BipartiteModel m = thermal_chain_model(1);
    const CommutantReport rep = commutant(chain_jumps(m), 4);
    CHECK(rep.dimension == 2);  // identity and the swap
    CHECK(distance_to_span(swap_two_qubits(), rep.basis) < 1e-9);
  }

  SUBCASE("the ordered-interaction Hamiltonian removes the exchange") {
    const BipartiteModel m = thermal_chain_model(1);
    std::vector<Matrix> ops = chain_jumps(m);
    ops.push_back(effective_hamiltonian(m, AncillaState::gibbs(1.0)).H_eff);
    const CommutantReport rep = commutant(ops, 4);
    CHECK(rep.dimension == 1);
    CHECK(rep.is_trivial);
  }

  SUBCASE("dimension is invariant under unitary conjugation") {
    std::mt19937 rng(401);
    const Matrix u = random_unitary(rng, 4);
    std::vector<Matrix> ops = chain_jumps(thermal_chain_model(1));
    for (Matrix& op : ops) op = u * op * u.adjoint();
    CHECK(commutant(ops, 4).dimension == 2);
  }
}

TEST_CASE("return-to-equilibrium criterion") {
  SUBCASE("symmetric chains at positive temperature satisfy it") {
    for (int n : {1, 2}) {
      const BipartiteModel m = thermal_chain_model(n);
      const EquilibriumReport rep = return_to_equilibrium_check(m, 1.0);
      CHECK(rep.criterion_satisfied);
      CHECK(rep.has_dissipation);
      CHECK(rep.faithful_invariant);
      CHECK(rep.kernel_dimension == 1);
      CHECK(rep.commutant_with_h.is_trivial);
      CHECK(rep.commutant_df.dimension == 1);
      CHECK(rep.projector_distance < 1e-8);
      // the bare jump commutant overshoots by exactly the exchange direction
      CHECK(rep.commutant_jumps.dimension == 2);
      CHECK(rep.jumps_vs_h_distance > 0.5);
      CHECK(verdict_line(rep) == "criterion satisfied");
    }
  }

  SUBCASE("infinite temperature genuinely loses uniqueness") {
    // the interaction term vanishes, the exchange survives in F and N, and
    // the kernel really is two-dimensional: inconclusive is the truth here
    const EquilibriumReport rep =
        return_to_equilibrium_check(thermal_chain_model(1), 0.0);
    CHECK_FALSE(rep.criterion_satisfied);
    CHECK(rep.has_dissipation);
    CHECK(rep.commutant_with_h.dimension == 2);
    CHECK(rep.commutant_df.dimension == 2);
    CHECK(rep.projector_distance < 1e-8);  // N = F still holds
    CHECK(rep.kernel_dimension == 2);
    CHECK(verdict_line(rep) == "criterion inconclusive");
  }

  SUBCASE("no coupling means no dissipation") {
    BipartiteModel m = emission_model();
    m.V[0].setZero();
    m.W[0].setZero();
    const EquilibriumReport rep = return_to_equilibrium_check(m, 1.0);
    CHECK_FALSE(rep.has_dissipation);
    CHECK_FALSE(rep.criterion_satisfied);
    CHECK(verdict_line(rep) == "criterion inconclusive (no dissipation)");
  }

  SUBCASE("pure dephasing is flagged inconclusive") {
    BipartiteModel m = emission_model();
    m.V[0] = pauli_z();
    m.W[0] = pauli_z();
    const EquilibriumReport rep = return_to_equilibrium_check(m, 1.0);
    CHECK_FALSE(rep.criterion_satisfied);
    CHECK(rep.has_dissipation);
    CHECK(rep.commutant_with_h.dimension == 6);
    CHECK(rep.kernel_dimension == 6);
    CHECK(verdict_line(rep) == "criterion inconclusive");
  }
}

TEST_CASE("invariant Gibbs state") {
  const BipartiteModel m = thermal_chain_model(1);

  SUBCASE("infinite temperature is maximally mixed") {
    CHECK(max_abs_diff(invariant_gibbs(m, 0.0),
                       Matrix(0.25 * Matrix::Identity(4, 4))) < 1e-14);
  }

  SUBCASE("product Gibbs values at beta = 1") {
    const double z = std::exp(-2.0) + 2.0 + std::exp(2.0);
    const Matrix rho = invariant_gibbs(m, 1.0);
    CHECK(std::abs(rho(0, 0).real() - std::exp(-2.0) / z) < 1e-14);
    CHECK(std::abs(rho(1, 1).real() - 1.0 / z) < 1e-14);
    CHECK(std::abs(rho(2, 2).real() - 1.0 / z) < 1e-14);
    CHECK(std::abs(rho(3, 3).real() - std::exp(2.0) / z) < 1e-14);
    CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0));  // diagonal
  }

  SUBCASE("annihilated by the thermal generator, faithful at finite beta") {
    for (int n : {1, 2}) {
      const BipartiteModel chain = thermal_chain_model(n);
      for (double beta : {0.5, 1.0, 2.0}) {
        const Matrix rho = invariant_gibbs(chain, beta);
        CHECK(generator_thermal(chain, beta).apply(rho).norm() < 1e-10);
        CHECK(num::herm_eig(rho).first.minCoeff() > 0.0);
      }
    }
  }

  SUBCASE("negative beta is rejected") {
    CHECK_THROWS_AS(invariant_gibbs(m, -0.1), std::invalid_argument);
  }

  SUBCASE("the generator kernel reconstructs exactly this state") {
    for (double beta : {0.5, 2.0}) {
      const SpectrumReport sp = spectrum(generator_thermal(m, beta));
      REQUIRE(sp.invariant_states.size() == 1);
      CHECK(max_abs_diff(sp.invariant_states[0], invariant_gibbs(m, beta)) <
            1e-9);
    }
  }
}

TEST_CASE("spectral gap") {
  Eigen::VectorXcd eig(4);
  eig << Complex(0, 0), Complex(-0.3, 2.0), Complex(-0.3, -2.0),
      Complex(-1.0, 0);
  CHECK(spectral_gap(eig) == doctest::Approx(0.3).epsilon(1e-14));

  Eigen::VectorXcd zeros = Eigen::VectorXcd::Zero(3);
  CHECK(spectral_gap(zeros) == 0.0);

  Eigen::VectorXcd near(3);
  near << Complex(0, 0), Complex(-1e-12, 0), Complex(-0.5, 1.0);
  CHECK(spectral_gap(near) == doctest::Approx(0.5).epsilon(1e-14));

  SUBCASE("known chain gaps") {
    const BipartiteModel m = thermal_chain_model(1);
    const auto gap_at = [&](double beta) {
      return spectral_gap(spectrum(generator_thermal(m, beta)).eigenvalues);
    };
    CHECK(gap_at(0.5) == doctest::Approx(0.1498535391).epsilon(1e-6));
    CHECK(gap_at(1.0) == doctest::Approx(0.4559939257).epsilon(1e-6));
    CHECK(gap_at(2.0) == doctest::Approx(0.4999999630).epsilon(1e-6));
  }
}

TEST_CASE("convergence to the invariant state") {
  const BipartiteModel m = thermal_chain_model(1);
  const double beta = 1.0;
  std::vector<double> grid;
  for (int k = 0; k <= 80; ++k) grid.push_back(0.5 * k);

  SUBCASE("starting at the invariant state goes nowhere") {
    const DecayTable table =
        convergence_study(m, beta, invariant_gibbs(m, beta), grid);
    REQUIRE(table.distance.size() == grid.size());
    for (double d : table.distance) CHECK(d < 1e-10);
    CHECK_FALSE(table.fit_ok);
  }

  SUBCASE("a far-from-equilibrium state decays at the spectral gap rate") {
    Matrix rho0 = Matrix::Zero(4, 4);
    rho0(3, 3) = 1.0;
    const DecayTable table = convergence_study(m, beta, rho0, grid);
    CHECK(table.distance.front() > 0.1);
    CHECK(table.distance.back() < 1e-6);
    CHECK(table.spectral_gap == doctest::Approx(0.4559939257).epsilon(1e-6));
    REQUIRE(table.fit_ok);
    CHECK(std::abs(table.fitted_rate - table.spectral_gap) <
          0.2 * table.spectral_gap);
  }
}
