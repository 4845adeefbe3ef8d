#include "qdm/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdm::models {

namespace {

std::array<double, 4> corner_family_eigs(double ratio) {
  std::array<double, 4> eigs{0.0, 0.0, 1.0 - ratio, 1.0 + ratio};
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

int checked_integer(double value, const std::string& key) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-9 || rounded < 1.0)
    throw std::invalid_argument("parameter " + key +
                               " must be a positive integer");
  return static_cast<int>(rounded);
}

}  // namespace

double profile_eval(const NoiseProfile& profile, double t) {
  if (t < 0.0) throw std::invalid_argument("profile_eval: negative time");
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CosPowProfile>) {
          if (t == 0.0) return 1.0;
          const double c = std::cos(p.a * t);
          return std::pow(c * c, p.m);
        } else if constexpr (std::is_same_v<T, ExpProfile>) {
          if (t == 0.0) return 1.0;
          return std::exp(-p.alpha * t);
        } else if constexpr (std::is_same_v<T, StretchedExpProfile>) {
          if (t == 0.0) return 1.0;
          return std::exp(-p.alpha * std::pow(t, p.beta));
        } else {
          if (p.t.empty() || p.t.size() != p.p.size())
            throw std::invalid_argument("sampled profile: bad table");
          if (t <= p.t.front()) return p.p.front();
          if (t >= p.t.back()) return p.p.back();
          const auto it = std::upper_bound(p.t.begin(), p.t.end(), t);
          const std::size_t hi = static_cast<std::size_t>(it - p.t.begin());
          const std::size_t lo = hi - 1;
          const double w = (t - p.t[lo]) / (p.t[hi] - p.t[lo]);
          return p.p[lo] + w * (p.p[hi] - p.p[lo]);
        }
      },
      profile);
}

std::string profile_name(const NoiseProfile& profile) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CosPowProfile>)
          return "cospow";
        else if constexpr (std::is_same_v<T, ExpProfile>)
          return "exp";
        else if constexpr (std::is_same_v<T, StretchedExpProfile>)
          return "stretched";
        else
          return "sampled";
      },
      profile);
}

DynamicalMap werner_b(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("werner_b: p must lie in [0, 1]");
  ComplexMatrix b(4);
  b(0, 0) = b(3, 3) = (1.0 + p) / 2.0;
  b(1, 1) = b(2, 2) = (1.0 - p) / 2.0;
  b(0, 3) = b(3, 0) = p;
  return DynamicalMap(2, std::move(b));
}

StochasticMap werner_a(double p) { return b_to_a(werner_b(p)); }

std::array<double, 4> werner_intermediate_eigs(double p1, double p2) {
  if (p1 == 0.0)
    throw SingularMatrixError("werner_intermediate_eigs: p(t1) = 0");
  const double q = p2 / p1;
  std::array<double, 4> eigs{(1.0 - q) / 2.0, (1.0 - q) / 2.0,
                             (1.0 - q) / 2.0, (1.0 + 3.0 * q) / 2.0};
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double kappa_magnitude(const OpticalParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("kappa_magnitude: negative time");
  const double s = std::sin(t * params.delta_omega);
  const double envelope = std::exp(-0.5 * params.sigma * params.sigma * t * t);
  const double beat = 1.0 - 4.0 * params.a1 * (1.0 - params.a1) * s * s;
  return envelope * std::sqrt(std::max(beat, 0.0));
}

StochasticMap optical_a(std::complex<double> kappa) {
  if (std::abs(kappa) > 1.0 + 1e-12)
    throw std::invalid_argument("optical_a: |kappa| must not exceed 1");
  ComplexMatrix a(4);
  a(0, 0) = a(3, 3) = 1.0;
  a(1, 1) = std::conj(kappa);
  a(2, 2) = kappa;
  return StochasticMap(2, std::move(a));
}

DynamicalMap optical_b(std::complex<double> kappa) {
  return a_to_b(optical_a(kappa));
}

std::array<double, 4> optical_intermediate_eigs(std::complex<double> k1,
                                                std::complex<double> k2) {
  if (k1 == std::complex<double>{0.0, 0.0})
    throw SingularMatrixError("optical_intermediate_eigs: kappa(t1) = 0");
  return corner_family_eigs(std::abs(k2 / k1));
}

double spin_bath_x(const SpinBathParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("spin_bath_x: negative time");
  if (params.n < 1) throw std::invalid_argument("spin_bath_x: N must be >= 1");
  const double root_n = std::sqrt(static_cast<double>(params.n));
  const double c = std::cos(2.0 * params.coupling * t / root_n);
  return std::pow(c, params.n);
}

StochasticMap spin_bath_a(double x) {
  ComplexMatrix a(4);
  a(0, 0) = a(3, 3) = 1.0;
  a(1, 1) = a(2, 2) = x;
  return StochasticMap(2, std::move(a));
}

std::array<double, 4> spin_bath_intermediate_eigs(double x1, double x2) {
  if (x1 == 0.0)
    throw SingularMatrixError("spin_bath_intermediate_eigs: x(t1) = 0");
  return corner_family_eigs(x2 / x1);
}

StochasticMap two_qubit_a(const TwoQubitParams& params, double t) {
  // Coherences scale by cos(omega t); the generator is (omega/2) sz x sx.
  return spin_bath_a(std::cos(params.omega * t));
}

std::array<double, 4> two_qubit_intermediate_eigs(double t1, double t2,
                                                  double omega) {
  const double c1 = std::cos(omega * t1);
  if (c1 == 0.0)
    throw SingularMatrixError("two_qubit_intermediate_eigs: cos(w t1) = 0");
  return corner_family_eigs(std::abs(std::cos(omega * t2) / c1));
}

std::string model_name(const Model& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WernerModel>)
          return "werner";
        else if constexpr (std::is_same_v<T, OpticalModel>)
          return "optical";
        else if constexpr (std::is_same_v<T, SpinBathModel>)
          return "spinbath";
        else
          return "twoqubit";
      },
      model);
}

StochasticMap model_a_map(const Model& model, double t) {
  return std::visit(
      [t](const auto& m) -> StochasticMap {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WernerModel>)
          return werner_a(profile_eval(m.profile, t));
        else if constexpr (std::is_same_v<T, OpticalModel>)
          return optical_a({kappa_magnitude(m.params, t), 0.0});
        else if constexpr (std::is_same_v<T, SpinBathModel>)
          return spin_bath_a(spin_bath_x(m.params, t));
        else
          return two_qubit_a(m.params, t);
      },
      model);
}

std::vector<std::pair<std::string, double>> model_numeric_params(
    const Model& model) {
  return std::visit(
      [](const auto& m) -> std::vector<std::pair<std::string, double>> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WernerModel>) {
          return std::visit(
              [](const auto& p)
                  -> std::vector<std::pair<std::string, double>> {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, CosPowProfile>)
                  return {{"M", double(p.m)}, {"a", p.a}};
                else if constexpr (std::is_same_v<P, ExpProfile>)
                  return {{"alpha", p.alpha}};
                else if constexpr (std::is_same_v<P, StretchedExpProfile>)
                  return {{"alpha", p.alpha}, {"beta", p.beta}};
                else
                  return {};
              },
              m.profile);
        } else if constexpr (std::is_same_v<T, OpticalModel>) {
          return {{"A1", m.params.a1},
                  {"sigma", m.params.sigma},
                  {"delta_omega", m.params.delta_omega}};
        } else if constexpr (std::is_same_v<T, SpinBathModel>) {
          return {{"N", double(m.params.n)}, {"A", m.params.coupling}};
        } else {
          return {{"omega", m.params.omega}};
        }
      },
      model);
}

std::string model_profile_name(const Model& model) {
  if (const auto* w = std::get_if<WernerModel>(&model))
    return profile_name(w->profile);
  return {};
}

void set_model_param(Model& model, const std::string& key, double value) {
  const auto fail = [&]() {
    throw std::invalid_argument("model " + model_name(model) +
                               " has no parameter '" + key + "'");
  };
  std::visit(
      [&](auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WernerModel>) {
          if (key == "M") {
            if (auto* p = std::get_if<CosPowProfile>(&m.profile))
              p->m = checked_integer(value, key);
            else
              fail();
          } else if (key == "a") {
            if (auto* p = std::get_if<CosPowProfile>(&m.profile))
              p->a = value;
            else
              fail();
          } else if (key == "alpha") {
            if (auto* p = std::get_if<ExpProfile>(&m.profile))
              p->alpha = value;
            else if (auto* sp = std::get_if<StretchedExpProfile>(&m.profile))
              sp->alpha = value;
            else
              fail();
          } else if (key == "beta") {
            if (auto* p = std::get_if<StretchedExpProfile>(&m.profile))
              p->beta = value;
            else
              fail();
          } else {
            fail();
          }
        } else if constexpr (std::is_same_v<T, OpticalModel>) {
          if (key == "A1")
            m.params.a1 = value;
          else if (key == "sigma")
            m.params.sigma = value;
          else if (key == "delta_omega")
            m.params.delta_omega = value;
          else
            fail();
        } else if constexpr (std::is_same_v<T, SpinBathModel>) {
          if (key == "N")
            m.params.n = checked_integer(value, key);
          else if (key == "A")
            m.params.coupling = value;
          else
            fail();
        } else {
          if (key == "omega")
            m.params.omega = value;
          else
            fail();
        }
      },
      model);
}

}  // namespace qdm::models
