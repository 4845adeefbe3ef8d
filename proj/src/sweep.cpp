#include "qdm/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdm::sweep {

namespace {

// lambda_min of the intermediate map's Choi spectrum, or nullopt when the
// map at t1 is singular.
std::optional<std::vector<double>> pipeline_spectrum(
    const models::Model& model, double t1, double t2, double cp_tolerance,
    SweepVerdict& verdict) {
  const StochasticMap a1 = models::model_a_map(model, t1);
  const StochasticMap a2 = models::model_a_map(model, t2);
  try {
    const StochasticMap between = intermediate(a2, a1);
    const CpReport report = cp_classify(a_to_b(between), cp_tolerance);
    verdict = report.verdict == CpVerdict::cp ? SweepVerdict::cp
                                              : SweepVerdict::ncp;
    return report.eigenvalues;
  } catch (const SingularMatrixError&) {
    verdict = SweepVerdict::singular;
    return std::nullopt;
  }
}

std::optional<double> werner_concurrence_at(const models::Model& model,
                                            double t) {
  const auto* werner = std::get_if<models::WernerModel>(&model);
  if (!werner) return std::nullopt;
  const double p = models::profile_eval(werner->profile, t);
  const JamiolkowskiState jam = jamiolkowski_state(models::werner_a(p));
  return concurrence(jam.state);
}

}  // namespace

std::string to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::cp:
      return "CP";
    case SweepVerdict::ncp:
      return "NCP";
    default:
      return "Singular";
  }
}

std::vector<SweepRecord> run_sweep(const models::Model& model, double t1,
                                   const std::vector<double>& mu_grid,
                                   const std::optional<ParamVariation>& vary,
                                   double cp_tolerance) {
  if (t1 <= 0.0) throw std::invalid_argument("run_sweep: t1 must be > 0");
  if (mu_grid.empty()) throw std::invalid_argument("run_sweep: empty mu grid");
  for (std::size_t i = 0; i < mu_grid.size(); ++i) {
    if (mu_grid[i] <= 1.0 || (i > 0 && mu_grid[i] <= mu_grid[i - 1]))
      throw std::invalid_argument(
          "run_sweep: mu grid must be ascending with values > 1");
  }

  std::vector<models::Model> variants;
  if (vary) {
    if (vary->values.empty())
      throw std::invalid_argument("run_sweep: empty parameter grid");
    for (double value : vary->values) {
      models::Model variant = model;
      models::set_model_param(variant, vary->key, value);
      variants.push_back(std::move(variant));
    }
  } else {
    variants.push_back(model);
  }

  std::vector<SweepRecord> records;
  records.reserve(variants.size() * mu_grid.size());
  for (const models::Model& variant : variants) {
    for (double mu : mu_grid) {
      const double t2 = mu * t1;
      SweepRecord rec;
      rec.model = models::model_name(variant);
      rec.profile = models::model_profile_name(variant);
      rec.params = models::model_numeric_params(variant);
      rec.t1 = t1;
      rec.t2 = t2;
      rec.mu = mu;
      const auto spectrum =
          pipeline_spectrum(variant, t1, t2, cp_tolerance, rec.verdict);
      if (spectrum) {
        rec.eigenvalues = *spectrum;
        rec.lambda_min = spectrum->front();
        rec.concurrence = werner_concurrence_at(variant, t2);
      } else {
        rec.lambda_min = std::numeric_limits<double>::quiet_NaN();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<TransitionPoint> find_transitions(const models::Model& model,
                                              double t1, double mu_lo,
                                              double mu_hi,
                                              double initial_step,
                                              double cp_tolerance) {
  if (!(mu_lo > 1.0) || !(mu_hi > mu_lo))
    throw std::invalid_argument(
        "find_transitions: need 1 < mu_lo < mu_hi");
  if (initial_step <= 0.0)
    throw std::invalid_argument("find_transitions: step must be > 0");

  const auto lambda_min_at = [&](double mu) -> std::optional<double> {
    SweepVerdict verdict;
    const auto spectrum =
        pipeline_spectrum(model, t1, mu * t1, cp_tolerance, verdict);
    if (!spectrum) return std::nullopt;
    return spectrum->front();
  };

  std::vector<TransitionPoint> transitions;
  std::optional<double> prev_mu;
  std::optional<double> prev_lambda;

  for (double mu = mu_lo; mu <= mu_hi + 0.5 * initial_step;
       mu += initial_step) {
    const double mu_clamped = std::min(mu, mu_hi);
    const auto lambda = lambda_min_at(mu_clamped);
    if (!lambda) {  // singular points are excluded from brackets
      prev_mu.reset();
      prev_lambda.reset();
      continue;
    }
    if (prev_mu && prev_lambda && (*prev_lambda < 0.0) != (*lambda < 0.0)) {
      double lo = *prev_mu;
      double hi = mu_clamped;
      double f_lo = *prev_lambda;
      bool valid = true;
      while (hi - lo > 1e-8 * (0.5 * (lo + hi))) {
        const double mid = 0.5 * (lo + hi);
        const auto f_mid = lambda_min_at(mid);
        if (!f_mid) {
          valid = false;
          break;
        }
        if ((f_lo < 0.0) == (*f_mid < 0.0)) {
          lo = mid;
          f_lo = *f_mid;
        } else {
          hi = mid;
        }
      }
      if (valid) {
        transitions.push_back(TransitionPoint{
            0.5 * (lo + hi),
            *lambda < 0.0 ? TransitionPoint::Direction::to_ncp
                          : TransitionPoint::Direction::to_cp,
            hi - lo});
      }
    }
    prev_mu = mu_clamped;
    prev_lambda = lambda;
    if (mu_clamped >= mu_hi) break;
  }
  return transitions;
}

std::vector<ConcurrencePoint> concurrence_trajectory(
    const models::NoiseProfile& profile, const std::vector<double>& t_grid) {
  std::vector<ConcurrencePoint> points;
  points.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    if (t < 0.0 || (i > 0 && t <= t_grid[i - 1]))
      throw std::invalid_argument(
          "concurrence_trajectory: grid must be ascending and nonnegative");
    const double p = models::profile_eval(profile, t);
    const JamiolkowskiState jam = jamiolkowski_state(models::werner_a(p));
    points.push_back(ConcurrencePoint{t, p, concurrence(jam.state)});
  }
  return points;
}

}  // namespace qdm::sweep
