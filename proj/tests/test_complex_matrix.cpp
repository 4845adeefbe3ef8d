#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qdm/complex_matrix.hpp"

using namespace qdm;

namespace {

ComplexMatrix bell_minus_projector() {
  // |psi> = (|00> - |11>)/sqrt(2)
  ComplexMatrix rho(4);
  rho(0, 0) = rho(3, 3) = 0.5;
  rho(0, 3) = rho(3, 0) = -0.5;
  return rho;
}

}  // namespace

TEST_CASE("constructors reject malformed input") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)),
                  std::invalid_argument);
  std::vector<Complex> bad(4, Complex{0.0, 0.0});
  bad[2] = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(ComplexMatrix(2, bad), std::invalid_argument);
  bad[2] = Complex{0.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(ComplexMatrix(2, bad), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
}

TEST_CASE("kron identity and diagonal cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  const ComplexMatrix expected =
      ComplexMatrix::diagonal({{1, 0}, {-1, 0}, {-1, 0}, {1, 0}});
  CHECK(max_abs_diff(zz, expected) == 0.0);
}

TEST_CASE("sigma_x x sigma_x - sigma_y x sigma_y is the corner coupler") {
  const ComplexMatrix diff =
      kron(pauli_x(), pauli_x()) - kron(pauli_y(), pauli_y());
  // Hand expansion: xx is the full anti-diagonal of ones, yy the
  // anti-diagonal (-1, 1, 1, -1); the difference keeps only the corners.
  ComplexMatrix expected(4);
  expected(0, 3) = expected(3, 0) = 2.0;
  CHECK(max_abs_diff(diff, expected) == 0.0);
}

TEST_CASE("kron is associative and multiplicative on traces") {
  std::mt19937 rng(1234);
  const ComplexMatrix a = oracles::random_matrix(rng, 2);
  const ComplexMatrix b = oracles::random_matrix(rng, 2);
  const ComplexMatrix c = oracles::random_matrix(rng, 3);

  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
  CHECK(std::abs(kron(a, c).trace() - a.trace() * c.trace()) < 1e-13);
}

TEST_CASE("partial trace of a product state recovers the factors") {
  std::mt19937 rng(99);
  const ComplexMatrix rho_a = oracles::random_density(rng, 2);
  const ComplexMatrix rho_b = oracles::random_density(rng, 3);
  const ComplexMatrix joint = kron(rho_a, rho_b);

  const ComplexMatrix left = partial_trace(joint, 2, 3, TraceSide::second);
  const ComplexMatrix right = partial_trace(joint, 2, 3, TraceSide::first);
  CHECK(max_abs_diff(left, rho_a) < 1e-14);   // tr(rho_b) = 1
  CHECK(max_abs_diff(right, rho_b) < 1e-14);  // tr(rho_a) = 1
}

TEST_CASE("partial trace trivial and Bell cases") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  ComplexMatrix two_i2 = ComplexMatrix::identity(2);
  two_i2 *= Complex{2.0, 0.0};
  CHECK(max_abs_diff(partial_trace(i4, 2, 2, TraceSide::first), two_i2) == 0.0);

  const ComplexMatrix bell = bell_minus_projector();
  ComplexMatrix half_i2 = ComplexMatrix::identity(2);
  half_i2 *= Complex{0.5, 0.0};
  for (TraceSide side : {TraceSide::first, TraceSide::second}) {
    const ComplexMatrix reduced = partial_trace(bell, 2, 2, side);
    CHECK(max_abs_diff(reduced, half_i2) == 0.0);
    CHECK(max_abs_diff(reduced, oracles::partial_trace_sum(
                                    bell, 2, 2, side == TraceSide::first)) ==
          0.0);
  }
}

TEST_CASE("partial trace preserves the trace and checks dimensions") {
  std::mt19937 rng(7);
  const ComplexMatrix m = oracles::random_matrix(rng, 6);
  const ComplexMatrix over_first = partial_trace(m, 2, 3, TraceSide::first);
  const ComplexMatrix over_second = partial_trace(m, 2, 3, TraceSide::second);
  CHECK(std::abs(over_first.trace() - m.trace()) < 1e-13);
  CHECK(std::abs(over_second.trace() - m.trace()) < 1e-13);
  CHECK_THROWS_AS(partial_trace(m, 2, 2, TraceSide::first),
                  std::invalid_argument);
}

TEST_CASE("realign is an involution") {
  std::mt19937 rng(2024);
  for (std::size_t d : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = oracles::random_matrix(rng, d * d);
      CHECK(realign(realign(m)) == m);  // exact: pure index permutation
      CHECK(realign(m) == oracles::realign_sum(m, d));
    }
  }
}

TEST_CASE("realign of the dephasing map matches the corner pattern") {
  const Complex kappa{0.3, 0.4};
  const ComplexMatrix a =
      ComplexMatrix::diagonal({1.0, std::conj(kappa), kappa, 1.0});
  const ComplexMatrix b = realign(a);

  ComplexMatrix expected(4);
  expected(0, 0) = expected(3, 3) = 1.0;
  expected(0, 3) = std::conj(kappa);
  expected(3, 0) = kappa;
  CHECK(max_abs_diff(b, expected) == 0.0);
}

TEST_CASE("realign of the identity gives the unnormalized Bell projector") {
  const ComplexMatrix b = realign(ComplexMatrix::identity(4));
  ComplexMatrix expected(4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  CHECK(max_abs_diff(b, expected) == 0.0);
  CHECK(realign(ComplexMatrix::identity(4)) ==
        oracles::realign_sum(ComplexMatrix::identity(4), 2));
}

TEST_CASE("realign rejects dimensions that are not perfect squares") {
  CHECK_THROWS_AS(realign(ComplexMatrix(6)), std::invalid_argument);
}

TEST_CASE("vec/unvec follow the row-major convention") {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(0, 1) = 2.0;
  m(1, 0) = 3.0;
  m(1, 1) = 4.0;
  const auto v = vec(m);
  CHECK(v[1] == Complex{2.0, 0.0});
  CHECK(v[2] == Complex{3.0, 0.0});
  CHECK(unvec(v, 2) == m);
  CHECK_THROWS_AS(unvec(v, 3), std::invalid_argument);
}

TEST_CASE("matrix product against the definition") {
  std::mt19937 rng(5);
  const ComplexMatrix a = oracles::random_matrix(rng, 4);
  const ComplexMatrix b = oracles::random_matrix(rng, 4);
  const ComplexMatrix ab = a * b;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      CHECK(std::abs(ab(i, j) - acc) < 1e-14);
    }
}
