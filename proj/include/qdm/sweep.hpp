#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdm/models.hpp"

namespace qdm::sweep {

enum class SweepVerdict { cp, ncp, singular };

std::string to_string(SweepVerdict v);

/// One grid point of a regime scan. Singular points (A(t1,0) not invertible)
/// keep their row with an empty spectrum rather than being dropped.
struct SweepRecord {
  std::string model;
  std::string profile;  // profile family for werner records, else empty
  std::vector<std::pair<std::string, double>> params;
  double t1 = 0.0;
  double t2 = 0.0;
  double mu = 0.0;  // t2 / t1
  std::vector<double> eigenvalues;  // ascending; empty when singular
  double lambda_min = 0.0;          // NaN when singular
  SweepVerdict verdict = SweepVerdict::cp;
  std::optional<double> concurrence;  // werner records only
};

struct ParamVariation {
  std::string key;
  std::vector<double> values;
};

/// Evaluates the intermediate-map spectrum over mu_grid (optionally crossed
/// with a parameter grid). Eigenvalues always come from the full pipeline:
/// A(t1,0), A(mu t1,0) -> inversion -> composition -> realignment ->
/// eigensolve. Record order is parameter-major, mu-minor.
std::vector<SweepRecord> run_sweep(
    const models::Model& model, double t1, const std::vector<double>& mu_grid,
    const std::optional<ParamVariation>& vary = std::nullopt,
    double cp_tolerance = 0.0);

struct TransitionPoint {
  enum class Direction { to_ncp, to_cp };
  double mu_star;
  Direction direction;
  double bracket_width;
};

/// Scans lambda_min(mu) at the initial step, brackets each sign change and
/// refines it by bisection until the bracket is narrower than 1e-8 * mu.
std::vector<TransitionPoint> find_transitions(const models::Model& model,
                                              double t1, double mu_lo,
                                              double mu_hi,
                                              double initial_step = 1e-2,
                                              double cp_tolerance = 0.0);

struct ConcurrencePoint {
  double t;
  double p;
  double concurrence;
};

/// Concurrence of the map-state rho_ab(t) for a Werner profile, computed by
/// the full Wootters pipeline at every grid point.
std::vector<ConcurrencePoint> concurrence_trajectory(
    const models::NoiseProfile& profile, const std::vector<double>& t_grid);

}  // namespace qdm::sweep
