#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "windflex/stress/distributions.hpp"
#include "windflex/turbine/turbine.hpp"

namespace windflex::stress {

struct SpeedPair {
  double forecast;  // V^F, m/s
  double actual;    // V^A, m/s
};

/// Row-stochastic map from forecast-speed intervals to power-curve regions,
/// plus a fitted Region-II error law per interval and the constant stressed
/// speeds standing in for Regions I/III/IV.
class TransitionModel {
public:
  std::vector<double> interval_edges;          // M+1 breakpoints, last may be +inf
  std::vector<std::array<double, 4>> matrix;   // M rows over regions I..IV
  std::array<double, 3> region_placeholders = {1.0, 20.0, 30.0};  // I, III, IV (m/s)
  std::vector<std::optional<FittedDistribution>> conditional_dists;  // per interval
  double cut_in = 0.0;
  double rated_speed = 0.0;
  double cut_out = 0.0;

  std::size_t n_intervals() const { return matrix.size(); }
  int interval_of(double forecast_speed) const;  // -1 when outside the span
  void validate() const;

  nlohmann::json to_json() const;
  static TransitionModel from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static TransitionModel load(const std::string& path);
};

/// Default forecast-speed binning: 2 m/s bins from 0 to the cut-out plus
/// one open-ended bin.
std::vector<double> default_interval_edges(const turbine::TurbineSpec& spec);

/// Row-normalized transition counts. Throws when an interval has no
/// observations, naming the offending intervals (callers may merge bins).
TransitionModel build_transition_matrix(const std::vector<SpeedPair>& pairs,
                                        const std::vector<double>& edges,
                                        const turbine::TurbineSpec& spec);

struct FitOptions {
  std::size_t sample_floor = 30;  // below this, empirical fallback
  std::vector<DistFamily> candidates = default_candidate_families();
};

/// Fits the per-interval Region-II error distributions into `model`.
void fit_conditional_error_distributions(TransitionModel& model,
                                         const std::vector<SpeedPair>& pairs,
                                         const FitOptions& options = {});

/// Largest-remainder allocation of n samples over a probability row.
std::array<std::size_t, 4> allocate_counts(const std::array<double, 4>& row, std::size_t n);

/// n stressed actual speeds for one forecast value. Region counts follow
/// the transition row exactly (largest-remainder rounding); Region II draws
/// come from the interval's conditional law clamped into Region II; the
/// other regions use the placeholders. The substream index keys the
/// deterministic per-timestep randomness.
std::vector<double> sample_speed_errors(double v_forecast, std::size_t n,
                                        const TransitionModel& model, std::uint64_t seed,
                                        std::uint64_t substream_index = 0);

}  // namespace windflex::stress
