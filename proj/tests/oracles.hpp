#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "qdm/complex_matrix.hpp"

namespace oracles {

using qdm::Complex;
using qdm::ComplexMatrix;

// Brute-force partial trace by explicit index summation.
inline ComplexMatrix partial_trace_sum(const ComplexMatrix& m,
                                       std::size_t d1, std::size_t d2,
                                       bool over_first) {
  if (over_first) {
    ComplexMatrix out(d2);
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t l = 0; l < d2; ++l)
        for (std::size_t i = 0; i < d1; ++i)
          out(k, l) += m(i * d2 + k, i * d2 + l);
    return out;
  }
  ComplexMatrix out(d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k)
        out(i, j) += m(i * d2 + k, j * d2 + k);
  return out;
}

// Index-sum realignment: element-by-element relocation written from the
// definition B[(b1,a1),(b2,a2)] = A[(b1,b2),(a1,a2)].
inline ComplexMatrix realign_sum(const ComplexMatrix& m, std::size_t d) {
  ComplexMatrix out(d * d);
  for (std::size_t b1 = 0; b1 < d; ++b1)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t b2 = 0; b2 < d; ++b2)
        for (std::size_t a2 = 0; a2 < d; ++a2)
          out(b1 * d + a1, b2 * d + a2) = m(b1 * d + b2, a1 * d + a2);
  return out;
}

// Coefficients of det(lambda I - M) for Hermitian M via Newton's identities
// on the power sums t_k = tr(M^k). Returns p(x) = x^n + c[n-1] x^{n-1} + ...
inline std::vector<double> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> power_sums(n + 1, 0.0);
  ComplexMatrix acc = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = acc * m;
    power_sums[k] = acc.trace().real();
  }
  // e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} t_i
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      sum += sign * e[k - i] * power_sums[i];
    }
    e[k] = sum / double(k);
  }
  // p(x) = sum_k (-1)^k e_k x^{n-k}; monic with coeff[j] on x^j.
  std::vector<double> coeff(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    coeff[n - k] = sign * e[k];
  }
  return coeff;
}

// Durand-Kerner root finder for a monic real polynomial.
inline std::vector<double> real_polynomial_roots(
    const std::vector<double>& coeff) {
  const std::size_t n = coeff.size() - 1;
  std::vector<Complex> roots(n);
  const Complex seed{0.4, 0.9};
  Complex power{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    power *= seed;
    roots[i] = power;
  }
  const auto eval = [&](Complex x) {
    Complex acc{coeff[n], 0.0};
    for (std::size_t j = n; j-- > 0;) acc = acc * x + coeff[j];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const Complex delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  std::vector<double> out;
  for (const Complex& r : roots) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

inline ComplexMatrix random_matrix(std::mt19937& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  ComplexMatrix h = g + g.adjoint();
  h *= Complex{0.5, 0.0};
  return h;
}

inline ComplexMatrix random_density(std::mt19937& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return rho;
}

}  // namespace oracles
