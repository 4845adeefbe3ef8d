#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdm/maps.hpp"

namespace qdm::models {

// ---------------------------------------------------------------------------
// Noise profiles p(t) for the Werner-state map. All built-in families return
// exactly 1 at t = 0 so that A(0,0) is the identity.
// ---------------------------------------------------------------------------

/// p(t) = cos^{2m}(a t)
struct CosPowProfile {
  int m = 1;
  double a = 1.0;
};

/// p(t) = exp(-alpha t)
struct ExpProfile {
  double alpha = 1.0;
};

/// p(t) = exp(-alpha t^beta), beta > 0
struct StretchedExpProfile {
  double alpha = 1.0;
  double beta = 2.0;
};

/// Tabulated profile, linearly interpolated, clamped at the ends.
struct SampledProfile {
  std::vector<double> t;
  std::vector<double> p;
};

using NoiseProfile =
    std::variant<CosPowProfile, ExpProfile, StretchedExpProfile,
                 SampledProfile>;

double profile_eval(const NoiseProfile& profile, double t);
std::string profile_name(const NoiseProfile& profile);

// ---------------------------------------------------------------------------
// Werner-state map: B(p) = (1-p)/2 I_4 + 2p |psi_ME><psi_ME| with the
// maximally entangled |psi_ME> = (|00> + |11>)/sqrt(2). The family is
// multiplicative, A(p2) A(p1) = A(p1 p2), so exponential profiles compose
// into a one-parameter semigroup.
// ---------------------------------------------------------------------------

DynamicalMap werner_b(double p);
StochasticMap werner_a(double p);

/// Closed-form eigenvalues of B(t2,t1): three copies of (1-q)/2 and one
/// (1+3q)/2 with q = p2/p1, ascending.
std::array<double, 4> werner_intermediate_eigs(double p1, double p2);

// ---------------------------------------------------------------------------
// Optical dephasing model: polarization coherences scale by the decoherence
// function kappa(t).
// ---------------------------------------------------------------------------

struct OpticalParams {
  double a1 = 0.5;          // weight of the first frequency component, [0,1]
  double sigma = 0.0;       // Gaussian linewidth
  double delta_omega = 1.0; // half the component separation
};

/// |kappa(t)| = exp(-sigma^2 t^2 / 2) sqrt(1 - 4 a1 (1-a1) sin^2(t d_omega))
double kappa_magnitude(const OpticalParams& params, double t);

/// A = diag(1, conj(kappa), kappa, 1) in the {HH, HV, VH, VV} ordering.
StochasticMap optical_a(std::complex<double> kappa);
DynamicalMap optical_b(std::complex<double> kappa);

/// Closed-form eigenvalues of B(t2,t1): {0, 0, 1 -+ |k2/k1|}, ascending.
std::array<double, 4> optical_intermediate_eigs(std::complex<double> k1,
                                                std::complex<double> k2);

// ---------------------------------------------------------------------------
// Spin-bath dephasing: a qubit coupled to N bath spins, coherences scale by
// x(t) = cos^N(2 c t / sqrt(N)) for coupling strength c.
// ---------------------------------------------------------------------------

struct SpinBathParams {
  int n = 4;             // number of bath spins
  double coupling = 1.0; // system-bath coupling strength
};

double spin_bath_x(const SpinBathParams& params, double t);

/// A = diag(1, x, x, 1) = (1-x)/2 sigma_z x sigma_z + (1+x)/2 I_4.
StochasticMap spin_bath_a(double x);

/// Closed-form eigenvalues of B(t2,t1): {0, 0, 1 -+ x2/x1}, ascending.
std::array<double, 4> spin_bath_intermediate_eigs(double x1, double x2);

// ---------------------------------------------------------------------------
// Two-qubit unitary model: system qubit dephased through a partner qubit,
// coherences scale by cos(omega t).
// ---------------------------------------------------------------------------

struct TwoQubitParams {
  double omega = 1.0;
};

StochasticMap two_qubit_a(const TwoQubitParams& params, double t);

/// Closed-form eigenvalues of B(t2,t1): {0, 0, 1 -+ |cos(w t2)/cos(w t1)|}.
std::array<double, 4> two_qubit_intermediate_eigs(double t1, double t2,
                                                  double omega);

// ---------------------------------------------------------------------------
// Type-erased model handle shared by the sweep engine and the CLI.
// ---------------------------------------------------------------------------

struct WernerModel {
  NoiseProfile profile;
};
struct OpticalModel {
  OpticalParams params;
};
struct SpinBathModel {
  SpinBathParams params;
};
struct TwoQubitModel {
  TwoQubitParams params;
};

using Model =
    std::variant<WernerModel, OpticalModel, SpinBathModel, TwoQubitModel>;

std::string model_name(const Model& model);
StochasticMap model_a_map(const Model& model, double t);

/// Numeric parameters in a fixed documented order (CSV column order).
std::vector<std::pair<std::string, double>> model_numeric_params(
    const Model& model);

/// Profile family name for Werner models, empty otherwise.
std::string model_profile_name(const Model& model);

/// Sets a named numeric parameter (the sweep engine's vary axis). Keys:
/// werner {M, a, alpha, beta}, optical {A1, sigma, delta_omega},
/// spinbath {N, A}, twoqubit {omega}.
void set_model_param(Model& model, const std::string& key, double value);

}  // namespace qdm::models
