#include "qdm/dilation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qdm/linalg.hpp"

namespace qdm::dilation {

namespace {

ComplexMatrix random_state(std::mt19937& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g(i, j) = Complex{gauss(rng), gauss(rng)};
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return rho;
}

// Recursive adaptive Simpson on a complex integrand.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, Complex fa, Complex fb, Complex fm,
                         Complex whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex left = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
  const Complex right = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

Complex integrate(const std::function<Complex(double)>& f, double a,
                  double b, double tol) {
  const Complex fa = f(a);
  const Complex fb = f(b);
  const Complex fm = f(0.5 * (a + b));
  const Complex whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fb, fm, whole, tol, 48);
}

Complex gaussian_peak_transform(double mu, double sigma, double t,
                                double tol) {
  const auto integrand = [mu, sigma, t](double w) -> Complex {
    const double z = (w - mu) / sigma;
    const double weight =
        std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
    return weight * std::exp(Complex{0.0, -w * t});
  };
  return integrate(integrand, mu - 8.0 * sigma, mu + 8.0 * sigma, tol);
}

}  // namespace

ComplexMatrix spin_bath_evolve(const models::SpinBathParams& params, double t,
                               const ComplexMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("spin_bath_evolve: system must be a qubit");
  if (params.n < 1 || params.n > 64)
    throw std::invalid_argument("spin_bath_evolve: N must lie in [1, 64]");

  const int n = params.n;
  const double theta = 2.0 * params.coupling * t / std::sqrt(double(n));
  Complex factor{0.0, 0.0};
  double weight = std::pow(0.5, n);  // 2^{-N} C(N,0)
  for (int k = 0; k <= n; ++k) {
    const double magnetization = double(n - 2 * k);
    factor += weight * std::exp(Complex{0.0, -theta * magnetization});
    weight *= double(n - k) / double(k + 1);
  }

  ComplexMatrix out = rho;
  out(0, 1) *= factor;
  out(1, 0) *= std::conj(factor);
  return out;
}

ComplexMatrix spin_bath_evolve_dense(const models::SpinBathParams& params,
                                     double t, const ComplexMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("spin_bath_evolve_dense: system must be a qubit");
  if (params.n < 1 || params.n > 10)
    throw std::invalid_argument("spin_bath_evolve_dense: N must lie in [1, 10]");

  const int n = params.n;
  const std::size_t bath_dim = std::size_t{1} << n;

  ComplexMatrix bath_z(bath_dim);  // sum_k sigma_{k,z}
  for (int k = 0; k < n; ++k) {
    const std::size_t left = std::size_t{1} << k;
    const std::size_t right = std::size_t{1} << (n - k - 1);
    bath_z += kron(kron(ComplexMatrix::identity(left), pauli_z()),
                   ComplexMatrix::identity(right));
  }
  ComplexMatrix h = kron(pauli_z(), bath_z);
  h *= Complex{params.coupling / std::sqrt(double(n)), 0.0};

  const ComplexMatrix u = unitary_from_hamiltonian(h, t);

  ComplexMatrix bath_state = ComplexMatrix::identity(bath_dim);
  bath_state *= Complex{1.0 / double(bath_dim), 0.0};
  const ComplexMatrix joint = kron(rho, bath_state);

  const ComplexMatrix evolved = u * joint * u.adjoint();
  return partial_trace(evolved, 2, bath_dim, TraceSide::second);
}

ComplexMatrix two_qubit_evolve(const models::TwoQubitParams& params, double t,
                               const ComplexMatrix& rho_s,
                               const ComplexMatrix& rho_e) {
  if (rho_s.dim() != 2 || rho_e.dim() != 2)
    throw std::invalid_argument("two_qubit_evolve: both factors must be qubits");

  const double half = 0.5 * params.omega * t;
  ComplexMatrix u = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  u *= Complex{std::cos(half), 0.0};
  ComplexMatrix zx = kron(pauli_z(), pauli_x());
  zx *= Complex{0.0, -std::sin(half)};
  u += zx;

  const ComplexMatrix joint = kron(rho_s, rho_e);
  const ComplexMatrix evolved = u * joint * u.adjoint();
  return partial_trace(evolved, 2, 2, TraceSide::second);
}

std::complex<double> optical_kappa_integral(double a1, double omega1,
                                            double omega2, double sigma,
                                            double t) {
  if (sigma < 0.0)
    throw std::invalid_argument("optical_kappa_integral: sigma must be >= 0");
  if (sigma == 0.0) {
    return a1 * std::exp(Complex{0.0, -omega1 * t}) +
           (1.0 - a1) * std::exp(Complex{0.0, -omega2 * t});
  }
  constexpr double tol = 1e-9;
  return a1 * gaussian_peak_transform(omega1, sigma, t, tol) +
         (1.0 - a1) * gaussian_peak_transform(omega2, sigma, t, tol);
}

TomographyResult extract_a_map(const Evolver& evolver, std::size_t d,
                               double t) {
  ComplexMatrix a(d * d);
  for (std::size_t a1 = 0; a1 < d; ++a1)
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      ComplexMatrix unit(d);
      unit(a1, a2) = 1.0;
      const std::vector<Complex> response = vec(evolver(unit, t));
      const std::size_t col = a1 * d + a2;
      for (std::size_t row = 0; row < d * d; ++row) a(row, col) = response[row];
    }

  StochasticMap map(d, std::move(a));

  std::mt19937 rng(0x51ab17u);
  double residual = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = random_state(rng, d);
    const ComplexMatrix direct = evolver(rho, t);
    const ComplexMatrix mapped = unvec(map.matrix.apply(vec(rho)), d);
    residual = std::max(residual, max_abs_diff(direct, mapped));
  }
  if (residual > 1e-8)
    throw std::invalid_argument(
        "extract_a_map: evolver is not linear (residual " +
        std::to_string(residual) + ")");
  return TomographyResult{std::move(map), residual};
}

}  // namespace qdm::dilation
