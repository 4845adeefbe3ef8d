#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qdm/linalg.hpp"

using namespace qdm;

TEST_CASE("hermitian_eig on trivial spectra") {
  const Spectrum id = hermitian_eig(ComplexMatrix::identity(4));
  for (double ev : id.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-14));

  const Spectrum diag =
      hermitian_eig(ComplexMatrix::diagonal({0.0, 0.0, 2.0, 0.0}));
  CHECK(diag.eigenvalues[0] == 0.0);
  CHECK(diag.eigenvalues[1] == 0.0);
  CHECK(diag.eigenvalues[2] == 0.0);
  CHECK(diag.eigenvalues[3] == 2.0);
}

TEST_CASE("hermitian_eig matches characteristic polynomial roots") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    const ComplexMatrix h = oracles::random_hermitian(rng, 4);
    const Spectrum spec = hermitian_eig(h);
    const auto roots =
        oracles::real_polynomial_roots(oracles::characteristic_polynomial(h));
    REQUIRE(roots.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(std::abs(spec.eigenvalues[i] - roots[i]) < 1e-9);
  }
}

TEST_CASE("hermitian_eig invariants") {
  std::mt19937 rng(4242);
  for (std::size_t dim : {2, 4, 9, 16}) {
    const ComplexMatrix h = oracles::random_hermitian(rng, dim);
    const Spectrum spec = hermitian_eig(h);

    double eig_sum = 0.0;
    for (std::size_t i = 0; i + 1 < dim; ++i)
      CHECK(spec.eigenvalues[i] <= spec.eigenvalues[i + 1]);
    for (double ev : spec.eigenvalues) eig_sum += ev;
    CHECK(eig_sum == doctest::Approx(h.trace().real()).epsilon(1e-10));

    // Orthonormal eigenvectors.
    const ComplexMatrix gram =
        spec.eigenvectors.adjoint() * spec.eigenvectors;
    CHECK(max_abs_diff(gram, ComplexMatrix::identity(dim)) < 1e-10);

    // Reconstruction V Lambda V^dag = H.
    ComplexMatrix scaled = spec.eigenvectors;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i)
        scaled(i, j) *= spec.eigenvalues[j];
    const ComplexMatrix rebuilt = scaled * spec.eigenvectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-10 * (1.0 + h.max_abs()));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = Complex{1.0, 0.0};
  m(1, 0) = Complex{0.5, 0.0};
  CHECK_THROWS_AS(hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("hermitian_eig accepts and symmetrizes roundoff asymmetry") {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(0, 1) = Complex{0.5, 1e-13};
  m(1, 0) = Complex{0.5, -1e-13 + 1e-14};
  const Spectrum spec = hermitian_eig(m);
  CHECK(spec.eigenvalues[1] == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
}

TEST_CASE("invert on diagonal and identity maps") {
  CHECK(max_abs_diff(invert(ComplexMatrix::identity(4)),
                     ComplexMatrix::identity(4)) < 1e-14);

  const double x = 0.37;
  const ComplexMatrix inv =
      invert(ComplexMatrix::diagonal({1.0, x, x, 1.0}));
  CHECK(max_abs_diff(inv, ComplexMatrix::diagonal({1.0, 1.0 / x, 1.0 / x, 1.0})) <
        1e-13);
}

TEST_CASE("invert raises Singular on rank deficiency") {
  CHECK_THROWS_AS(invert(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 1.0})),
                  SingularMatrixError);
  CHECK_THROWS_AS(invert(ComplexMatrix(3)), SingularMatrixError);
  // Relative threshold: a uniformly tiny but well-conditioned matrix inverts.
  ComplexMatrix tiny = ComplexMatrix::identity(3);
  tiny *= Complex{1e-30, 0.0};
  CHECK(std::abs(invert(tiny)(0, 0) - Complex{1e30, 0.0}) < 1e16);
}

TEST_CASE("invert is a right and left inverse on random matrices") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = oracles::random_matrix(rng, 4);
    const ComplexMatrix inv = invert(m);
    CHECK(max_abs_diff(m * inv, ComplexMatrix::identity(4)) < 1e-10);
    CHECK(max_abs_diff(inv * m, ComplexMatrix::identity(4)) < 1e-10);
  }
}

TEST_CASE("unitary_from_hamiltonian basics") {
  std::mt19937 rng(11);
  const ComplexMatrix h = oracles::random_hermitian(rng, 4);

  CHECK(unitary_from_hamiltonian(h, 0.0) == ComplexMatrix::identity(4));

  const double t = 0.8;
  const ComplexMatrix u = unitary_from_hamiltonian(h, t);
  CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)) < 1e-10);

  // Same generator composes additively.
  const ComplexMatrix u1 = unitary_from_hamiltonian(h, 0.3);
  const ComplexMatrix u2 = unitary_from_hamiltonian(h, 0.5);
  CHECK(max_abs_diff(u1 * u2, u) < 1e-10);
}

TEST_CASE("unitary_from_hamiltonian of the dephasing generator") {
  // h = (w/2) sz x sx gives U(t) = cos(wt/2) I - i sin(wt/2) sz x sx.
  const double omega = 1.3, t = 0.9;
  ComplexMatrix h = kron(pauli_z(), pauli_x());
  h *= Complex{omega / 2.0, 0.0};
  const ComplexMatrix u = unitary_from_hamiltonian(h, t);

  ComplexMatrix expected = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  expected *= Complex{std::cos(omega * t / 2.0), 0.0};
  ComplexMatrix zx = kron(pauli_z(), pauli_x());
  zx *= Complex{0.0, -std::sin(omega * t / 2.0)};
  expected += zx;
  CHECK(max_abs_diff(u, expected) < 1e-12);
}

TEST_CASE("unitary_from_hamiltonian of a diagonal generator is a phase table") {
  const ComplexMatrix h = ComplexMatrix::diagonal({0.2, -1.5, 3.0});
  const double t = 1.7;
  const ComplexMatrix u = unitary_from_hamiltonian(h, t);
  for (std::size_t k = 0; k < 3; ++k) {
    const Complex expected = std::exp(Complex{0.0, -h(k, k).real() * t});
    CHECK(std::abs(u(k, k) - expected) < 1e-13);
  }
  CHECK_THROWS_AS(
      unitary_from_hamiltonian(oracles::random_matrix(*(new std::mt19937(3)), 3),
                               1.0),
      std::invalid_argument);
}
