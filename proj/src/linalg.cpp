#include "qdm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace qdm {

namespace {

constexpr double kHermiticityTol = 1e-10;
constexpr double kJacobiTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kPivotTol = 1e-12;

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing m(p,q). The plane rotation
//   R[p,p] = c, R[p,q] = s e^{i psi}, R[q,p] = -s e^{-i psi}, R[q,q] = c
// with psi the phase of m(p,q) reduces the update to the real symmetric
// case with off-diagonal magnitude |m(p,q)|.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const Complex b = m(p, q);
  const double babs = std::abs(b);
  if (babs == 0.0) return;
  const Complex phase = b / babs;

  const double alpha = m(p, p).real();
  const double beta = m(q, q).real();
  const double tau = (beta - alpha) / (2.0 * babs);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = c * mkp - s * std::conj(phase) * mkq;
    m(k, q) = s * phase * mkp + c * mkq;
    m(p, k) = std::conj(m(k, p));
    m(q, k) = std::conj(m(k, q));
  }
  m(p, p) = Complex{c * c * alpha - 2.0 * c * s * babs + s * s * beta, 0.0};
  m(q, q) = Complex{s * s * alpha + 2.0 * c * s * babs + c * c * beta, 0.0};
  m(p, q) = Complex{0.0, 0.0};
  m(q, p) = Complex{0.0, 0.0};

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& m) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermiticityTol)
    throw std::invalid_argument(
        "hermitian_eig: input is not Hermitian (max deviation " +
        std::to_string(defect) + ")");

  const std::size_t n = m.dim();
  ComplexMatrix work(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      work(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double norm = work.frobenius_norm();
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(work);
    if (off == 0.0 || off < kJacobiTol * norm) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, v, p, q);
  }
  if (!converged && off_diagonal_norm(work) >= kJacobiTol * norm)
    throw std::runtime_error("hermitian_eig: Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return work(a, a).real() < work(b, b).real();
  });

  Spectrum spec{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t j = 0; j < n; ++j) {
    spec.eigenvalues[j] = work(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i)
      spec.eigenvectors(i, j) = v(i, order[j]);
  }
  return spec;
}

ComplexMatrix invert(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double threshold = kPivotTol * m.max_abs();
  if (m.max_abs() == 0.0)
    throw SingularMatrixError("invert: zero matrix");

  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag < threshold)
      throw SingularMatrixError("invert: singular matrix (pivot " +
                                std::to_string(pivot_mag) +
                                " below threshold)");
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot_row, j));
        std::swap(inv(col, j), inv(pivot_row, j));
      }
    }
    const Complex pivot = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = a(r, col);
      if (factor.real() == 0.0 && factor.imag() == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t) {
  if (t == 0.0) return ComplexMatrix::identity(h.dim());
  const Spectrum spec = hermitian_eig(h);
  const std::size_t n = h.dim();

  // V diag(e^{-i lambda t}) V^dagger; scaling columns keeps this at one
  // dense product.
  ComplexMatrix scaled(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex phase = std::exp(Complex{0.0, -spec.eigenvalues[j] * t});
    for (std::size_t i = 0; i < n; ++i)
      scaled(i, j) = spec.eigenvectors(i, j) * phase;
  }
  return scaled * spec.eigenvectors.adjoint();
}

}  // namespace qdm
