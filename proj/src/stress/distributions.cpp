#include "windflex/stress/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/logistic.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <nlohmann/json.hpp>

#include "windflex/common.hpp"

namespace windflex::stress {

namespace {

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double stddev_of(std::span<const double> xs, double mu) {
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double median_of(std::vector<double> xs) {
  const std::size_t n = xs.size();
  std::nth_element(xs.begin(), xs.begin() + n / 2, xs.end());
  double hi = xs[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(xs.begin(), xs.begin() + n / 2 - 1, xs.end());
  return 0.5 * (hi + xs[n / 2 - 1]);
}

double logistic_sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

FittedDistribution fit_normal(std::span<const double> xs) {
  FittedDistribution d;
  d.family = DistFamily::Normal;
  const double mu = mean_of(xs);
  const double sigma = std::max(1e-12, stddev_of(xs, mu));
  d.params = {mu, sigma};
  return d;
}

FittedDistribution fit_laplace(std::span<const double> xs) {
  FittedDistribution d;
  d.family = DistFamily::Laplace;
  const double mu = median_of({xs.begin(), xs.end()});
  double b = 0.0;
  for (double x : xs) b += std::abs(x - mu);
  b = std::max(1e-12, b / static_cast<double>(xs.size()));
  d.params = {mu, b};
  return d;
}

FittedDistribution fit_logistic(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double mu = mean_of(xs);
  double s = std::max(1e-12, stddev_of(xs, mu) * std::sqrt(3.0) / 3.14159265358979323846);

  // Alternating bisections on the two score equations; both are monotone
  // in their own parameter.
  for (int round = 0; round < 40; ++round) {
    auto dmu = [&](double m) {
      double acc = 0.0;
      for (double x : xs) acc += 2.0 * logistic_sigmoid((x - m) / s) - 1.0;
      return acc;
    };
    double lo = mu - 10.0 * s, hi = mu + 10.0 * s;
    while (dmu(lo) < 0.0) lo -= 10.0 * s;
    while (dmu(hi) > 0.0) hi += 10.0 * s;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (dmu(mid) > 0.0 ? lo : hi) = mid;
    }
    mu = 0.5 * (lo + hi);

    auto ds = [&](double sc) {
      double acc = 0.0;
      for (double x : xs) {
        const double z = (x - mu) / sc;
        acc += z * (2.0 * logistic_sigmoid(z) - 1.0);
      }
      return acc - n;
    };
    double slo = s / 64.0, shi = s * 64.0;
    while (ds(slo) < 0.0 && slo > 1e-14) slo /= 4.0;
    while (ds(shi) > 0.0 && shi < 1e14) shi *= 4.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = std::sqrt(slo * shi);
      (ds(mid) > 0.0 ? slo : shi) = mid;
    }
    const double new_s = std::sqrt(slo * shi);
    if (std::abs(new_s - s) < 1e-12 * (1.0 + s)) {
      s = new_s;
      break;
    }
    s = new_s;
  }
  FittedDistribution d;
  d.family = DistFamily::Logistic;
  d.params = {mu, std::max(1e-12, s)};
  return d;
}

FittedDistribution fit_shifted_gamma(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  const double mu = mean_of(xs);
  const double sd = std::max(1e-12, stddev_of(xs, mu));
  double skew = 0.0;
  for (double x : xs) skew += std::pow((x - mu) / sd, 3.0);
  skew /= n;

  // Moment-matched shape; near-symmetric or left-skewed samples land on a
  // large shape (approximately normal limb of the family).
  const double g = std::max(skew, 0.02);
  double shape = std::min(1e4, 4.0 / (g * g));
  double scale = sd / std::sqrt(shape);
  double shift = mu - shape * scale;
  const double min_x = *std::min_element(xs.begin(), xs.end());
  const double max_x = *std::max_element(xs.begin(), xs.end());
  if (shift >= min_x) shift = min_x - 1e-9 * (max_x - min_x + 1.0);

  // MLE refinement of shape/scale for the fixed shift (Minka's update).
  double sum_y = 0.0, sum_log_y = 0.0;
  for (double x : xs) {
    const double y = x - shift;
    sum_y += y;
    sum_log_y += std::log(y);
  }
  const double ybar = sum_y / n;
  const double s_stat = std::log(ybar) - sum_log_y / n;
  if (s_stat > 1e-12) {
    double k = (3.0 - s_stat + std::sqrt((s_stat - 3.0) * (s_stat - 3.0) + 24.0 * s_stat)) /
               (12.0 * s_stat);
    for (int it = 0; it < 50 && k > 1e-8 && k < 1e6; ++it) {
      const double f = std::log(k) - boost::math::digamma(k) - s_stat;
      const double fp = 1.0 / k - boost::math::trigamma(k);
      const double step = f / fp;
      if (!std::isfinite(step)) break;
      const double nk = k - step;
      if (!(nk > 0.0)) break;
      if (std::abs(nk - k) < 1e-10 * k) {
        k = nk;
        break;
      }
      k = nk;
    }
    if (std::isfinite(k) && k > 1e-8) {
      shape = std::min(1e6, k);
      scale = ybar / shape;
    }
  }

  FittedDistribution d;
  d.family = DistFamily::ShiftedGamma;
  d.params = {shape, std::max(1e-12, scale), shift};
  return d;
}

FittedDistribution fit_student_t(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double mu = median_of({xs.begin(), xs.end()});
  double sigma = std::max(1e-12, stddev_of(xs, mean_of(xs)) * 0.8);
  double nu = 5.0;

  std::vector<double> w(xs.size());
  for (int round = 0; round < 120; ++round) {
    double sw = 0.0, swx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double z = (xs[i] - mu) / sigma;
      w[i] = (nu + 1.0) / (nu + z * z);
      sw += w[i];
      swx += w[i] * xs[i];
    }
    const double new_mu = swx / sw;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      ss += w[i] * (xs[i] - new_mu) * (xs[i] - new_mu);
    const double new_sigma = std::max(1e-12, std::sqrt(ss / n));

    double c = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double z = (xs[i] - new_mu) / new_sigma;
      const double wi = (nu + 1.0) / (nu + z * z);
      c += std::log(wi) - wi;
    }
    c /= n;
    auto h = [&](double v) {
      return -boost::math::digamma(0.5 * v) + std::log(0.5 * v) + 1.0 + c +
             boost::math::digamma(0.5 * (v + 1.0)) - std::log(0.5 * (v + 1.0));
    };
    double lo = 0.3, hi = 1000.0;
    if (h(lo) < 0.0) {
      nu = lo;
    } else if (h(hi) > 0.0) {
      nu = hi;
    } else {
      for (int it = 0; it < 60; ++it) {
        const double mid = std::sqrt(lo * hi);
        (h(mid) > 0.0 ? lo : hi) = mid;
      }
      nu = std::sqrt(lo * hi);
    }

    const bool done = std::abs(new_mu - mu) < 1e-10 * (1.0 + std::abs(mu)) &&
                      std::abs(new_sigma - sigma) < 1e-10 * (1.0 + sigma);
    mu = new_mu;
    sigma = new_sigma;
    if (done) break;
  }

  FittedDistribution d;
  d.family = DistFamily::StudentT;
  d.params = {nu, mu, sigma};
  return d;
}

}  // namespace

std::string family_name(DistFamily f) {
  switch (f) {
    case DistFamily::Normal: return "normal";
    case DistFamily::Laplace: return "laplace";
    case DistFamily::Logistic: return "logistic";
    case DistFamily::ShiftedGamma: return "shifted-gamma";
    case DistFamily::StudentT: return "student-t";
    case DistFamily::Empirical: return "empirical";
  }
  return "?";
}

DistFamily family_from_name(const std::string& name) {
  if (name == "normal") return DistFamily::Normal;
  if (name == "laplace") return DistFamily::Laplace;
  if (name == "logistic") return DistFamily::Logistic;
  if (name == "shifted-gamma") return DistFamily::ShiftedGamma;
  if (name == "student-t") return DistFamily::StudentT;
  if (name == "empirical") return DistFamily::Empirical;
  throw ValidationError("unknown distribution family: " + name);
}

double FittedDistribution::pdf(double x) const {
  switch (family) {
    case DistFamily::Normal:
      return boost::math::pdf(boost::math::normal_distribution<>(params[0], params[1]), x);
    case DistFamily::Laplace:
      return boost::math::pdf(boost::math::laplace_distribution<>(params[0], params[1]), x);
    case DistFamily::Logistic:
      return boost::math::pdf(boost::math::logistic_distribution<>(params[0], params[1]), x);
    case DistFamily::ShiftedGamma: {
      const double y = x - params[2];
      if (y <= 0.0) return 0.0;
      return boost::math::pdf(boost::math::gamma_distribution<>(params[0], params[1]), y);
    }
    case DistFamily::StudentT: {
      const double z = (x - params[1]) / params[2];
      return boost::math::pdf(boost::math::students_t_distribution<>(params[0]), z) / params[2];
    }
    case DistFamily::Empirical: {
      if (x < edges.front() || x >= edges.back()) return 0.0;
      const auto it = std::upper_bound(edges.begin(), edges.end(), x);
      const std::size_t b = static_cast<std::size_t>(it - edges.begin()) - 1;
      const double mass = cumulative[b + 1] - cumulative[b];
      return mass / (edges[b + 1] - edges[b]);
    }
  }
  return 0.0;
}

double FittedDistribution::cdf(double x) const {
  switch (family) {
    case DistFamily::Normal:
      return boost::math::cdf(boost::math::normal_distribution<>(params[0], params[1]), x);
    case DistFamily::Laplace:
      return boost::math::cdf(boost::math::laplace_distribution<>(params[0], params[1]), x);
    case DistFamily::Logistic:
      return boost::math::cdf(boost::math::logistic_distribution<>(params[0], params[1]), x);
    case DistFamily::ShiftedGamma: {
      const double y = x - params[2];
      if (y <= 0.0) return 0.0;
      return boost::math::cdf(boost::math::gamma_distribution<>(params[0], params[1]), y);
    }
    case DistFamily::StudentT: {
      const double z = (x - params[1]) / params[2];
      return boost::math::cdf(boost::math::students_t_distribution<>(params[0]), z);
    }
    case DistFamily::Empirical: {
      if (x <= edges.front()) return 0.0;
      if (x >= edges.back()) return 1.0;
      const auto it = std::upper_bound(edges.begin(), edges.end(), x);
      const std::size_t b = static_cast<std::size_t>(it - edges.begin()) - 1;
      const double w = (x - edges[b]) / (edges[b + 1] - edges[b]);
      return cumulative[b] + w * (cumulative[b + 1] - cumulative[b]);
    }
  }
  return 0.0;
}

double FittedDistribution::quantile(double u) const {
  u = std::clamp(u, 1e-15, 1.0 - 1e-15);
  switch (family) {
    case DistFamily::Normal:
      return boost::math::quantile(boost::math::normal_distribution<>(params[0], params[1]), u);
    case DistFamily::Laplace:
      return boost::math::quantile(boost::math::laplace_distribution<>(params[0], params[1]), u);
    case DistFamily::Logistic:
      return boost::math::quantile(boost::math::logistic_distribution<>(params[0], params[1]), u);
    case DistFamily::ShiftedGamma:
      return params[2] +
             boost::math::quantile(boost::math::gamma_distribution<>(params[0], params[1]), u);
    case DistFamily::StudentT:
      return params[1] +
             params[2] * boost::math::quantile(boost::math::students_t_distribution<>(params[0]), u);
    case DistFamily::Empirical: {
      const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
      std::size_t b = static_cast<std::size_t>(it - cumulative.begin());
      if (b == 0) b = 1;
      if (b >= cumulative.size()) b = cumulative.size() - 1;
      const double c0 = cumulative[b - 1], c1 = cumulative[b];
      const double w = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
      return edges[b - 1] + w * (edges[b] - edges[b - 1]);
    }
  }
  return 0.0;
}

FittedDistribution fit_family(DistFamily family, std::span<const double> samples) {
  if (samples.size() < 2) throw ModelError("too few samples to fit a distribution");
  FittedDistribution d;
  switch (family) {
    case DistFamily::Normal: d = fit_normal(samples); break;
    case DistFamily::Laplace: d = fit_laplace(samples); break;
    case DistFamily::Logistic: d = fit_logistic(samples); break;
    case DistFamily::ShiftedGamma: d = fit_shifted_gamma(samples); break;
    case DistFamily::StudentT: d = fit_student_t(samples); break;
    case DistFamily::Empirical: return fit_empirical(samples);
  }
  d.sample_count = samples.size();
  d.goodness = histogram_sse(d, samples);
  return d;
}

FittedDistribution fit_empirical(std::span<const double> samples) {
  if (samples.empty()) throw ModelError("cannot build an empirical distribution from no samples");
  FittedDistribution d;
  d.family = DistFamily::Empirical;
  d.sample_count = samples.size();

  double lo = *std::min_element(samples.begin(), samples.end());
  double hi = *std::max_element(samples.begin(), samples.end());
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const std::size_t bins = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(samples.size())))), 4, 50);
  d.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b)
    d.edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  std::vector<double> counts(bins, 0.0);
  for (double x : samples) {
    auto b = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
    if (b >= bins) b = bins - 1;
    counts[b] += 1.0;
  }
  d.cumulative.resize(bins + 1);
  d.cumulative[0] = 0.0;
  for (std::size_t b = 0; b < bins; ++b)
    d.cumulative[b + 1] = d.cumulative[b] + counts[b] / static_cast<double>(samples.size());
  d.cumulative.back() = 1.0;
  return d;
}

FittedDistribution fit_best(std::span<const double> samples,
                            const std::vector<DistFamily>& candidates) {
  if (candidates.empty()) throw ModelError("no candidate families");
  bool have = false;
  FittedDistribution best;
  // A challenger must improve the score by a relative margin; otherwise the
  // earlier family wins (near-identical shapes, e.g. normal vs wide-nu t).
  constexpr double kMargin = 0.005;
  for (DistFamily f : candidates) {
    FittedDistribution d = fit_family(f, samples);
    if (!have || d.goodness < best.goodness * (1.0 - kMargin)) {
      best = std::move(d);
      have = true;
    }
  }
  return best;
}

double histogram_sse(const FittedDistribution& dist, std::span<const double> samples,
                     std::size_t bins) {
  double lo = *std::min_element(samples.begin(), samples.end());
  double hi = *std::max_element(samples.begin(), samples.end());
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<double> counts(bins, 0.0);
  for (double x : samples) {
    auto b = static_cast<std::size_t>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    counts[b] += 1.0;
  }
  double sse = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double density = counts[b] / (static_cast<double>(samples.size()) * width);
    const double center = lo + width * (static_cast<double>(b) + 0.5);
    const double diff = dist.pdf(center) - density;
    sse += diff * diff;
  }
  return sse;
}

nlohmann::json FittedDistribution::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  j["params"] = params;
  j["goodness"] = goodness;
  j["sample_count"] = sample_count;
  if (is_empirical()) {
    j["edges"] = edges;
    j["cumulative"] = cumulative;
  }
  return j;
}

FittedDistribution FittedDistribution::from_json(const nlohmann::json& j) {
  FittedDistribution d;
  d.family = family_from_name(j.at("family").get<std::string>());
  d.params = j.value("params", std::vector<double>{});
  d.goodness = j.value("goodness", 0.0);
  d.sample_count = j.value("sample_count", std::size_t{0});
  if (d.is_empirical()) {
    d.edges = j.at("edges").get<std::vector<double>>();
    d.cumulative = j.at("cumulative").get<std::vector<double>>();
  }
  return d;
}

}  // namespace windflex::stress
