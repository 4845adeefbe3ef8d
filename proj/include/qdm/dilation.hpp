#pragma once

#include <complex>
#include <functional>

#include "qdm/maps.hpp"
#include "qdm/models.hpp"

namespace qdm::dilation {

/// Linear map of a 2x2 input matrix at time t. Evolvers must be linear in
/// the input (they are fed matrix units during tomography, not just states).
using Evolver =
    std::function<ComplexMatrix(const ComplexMatrix& rho, double t)>;

/// Spin-bath reduced dynamics through the magnetization-sector sum: the
/// coherence picks up the factor
///   sum_k 2^{-N} C(N,k) exp(-2 i c t (N - 2k) / sqrt(N)),
/// diagonals are untouched. Capped at N <= 64 so the binomial weights stay
/// representable.
ComplexMatrix spin_bath_evolve(const models::SpinBathParams& params, double t,
                               const ComplexMatrix& rho);

/// Same dynamics from the full 2^{N+1}-dimensional dilation: builds the
/// Hamiltonian, exponentiates it, conjugates rho x I/2^N and traces out the
/// bath. N <= 10.
ComplexMatrix spin_bath_evolve_dense(const models::SpinBathParams& params,
                                     double t, const ComplexMatrix& rho);

/// Tr_E[U (rho_s x rho_e) U^dag] for the two-qubit model with
/// U = cos(w t / 2) I - i sin(w t / 2) sz x sx.
ComplexMatrix two_qubit_evolve(const models::TwoQubitParams& params, double t,
                               const ComplexMatrix& rho_s,
                               const ComplexMatrix& rho_e);

/// Decoherence function from the spectral model: kappa(t) = the Fourier
/// transform of a1 N(omega1, sigma) + (1 - a1) N(omega2, sigma). sigma = 0
/// short-circuits to the two-phasor sum; otherwise adaptive Simpson over
/// mu +- 8 sigma per peak, absolute tolerance 1e-9.
std::complex<double> optical_kappa_integral(double a1, double omega1,
                                            double omega2, double sigma,
                                            double t);

struct TomographyResult {
  StochasticMap a_map;
  double residual;  // max deviation of the re-applied map on random states
};

/// Linear-response tomography: column (a1,a2) of A is the flattened response
/// to the matrix unit E_{a1 a2}. Throws when the residual on random states
/// exceeds 1e-8 (non-linear evolver).
TomographyResult extract_a_map(const Evolver& evolver, std::size_t d,
                               double t);

}  // namespace qdm::dilation
