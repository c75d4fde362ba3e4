#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace windflex::stress {

enum class DistFamily { Normal, Laplace, Logistic, ShiftedGamma, StudentT, Empirical };

std::string family_name(DistFamily f);
DistFamily family_from_name(const std::string& name);

/// A fitted parametric error law (or the flagged empirical fallback when
/// the sample floor was not met). Parameter layout:
///   normal   {mu, sigma}        laplace {mu, b}      logistic {mu, s}
///   gamma    {shape, scale, shift}                    student-t {nu, mu, sigma}
class FittedDistribution {
public:
  DistFamily family = DistFamily::Normal;
  std::vector<double> params;
  double goodness = 0.0;  // SSE of pdf vs empirical histogram; lower is better
  std::size_t sample_count = 0;

  // Empirical fallback payload: bin edges and cumulative mass at the edges.
  std::vector<double> edges;
  std::vector<double> cumulative;

  bool is_empirical() const { return family == DistFamily::Empirical; }

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double u) const;  // u in (0, 1)

  nlohmann::json to_json() const;
  static FittedDistribution from_json(const nlohmann::json& j);
};

/// Maximum-likelihood fit of one family; throws ModelError when the family
/// cannot represent the sample (e.g. too few points).
FittedDistribution fit_family(DistFamily family, std::span<const double> samples);

FittedDistribution fit_empirical(std::span<const double> samples);

inline std::vector<DistFamily> default_candidate_families() {
  return {DistFamily::Normal, DistFamily::Laplace, DistFamily::Logistic,
          DistFamily::ShiftedGamma, DistFamily::StudentT};
}

/// Fits every candidate family and keeps the lowest histogram-SSE score.
/// A later candidate must beat the incumbent by a small relative margin so
/// near-identical shapes resolve to the earliest (simplest) family.
FittedDistribution fit_best(std::span<const double> samples,
                            const std::vector<DistFamily>& candidates =
                                default_candidate_families());

/// SSE between a candidate pdf and the density histogram of the samples.
double histogram_sse(const FittedDistribution& dist, std::span<const double> samples,
                     std::size_t bins = 50);

}  // namespace windflex::stress
