#include "windflex/weather/standardize.hpp"

#include <cmath>

#include "windflex/common.hpp"

namespace windflex::weather {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

int StandardizedTable::find(const std::string& feature_id) const {
  for (std::size_t i = 0; i < feature_ids.size(); ++i)
    if (feature_ids[i] == feature_id) return static_cast<int>(i);
  return -1;
}

Eigen::MatrixXd StandardizedTable::destandardize() const {
  Eigen::MatrixXd out = X;
  for (Eigen::Index j = 0; j < X.cols(); ++j)
    out.col(j) = X.col(j) * stddev(j) + Eigen::VectorXd::Constant(X.rows(), mean(j));
  return out;
}

double encode_direction_deg(double deg) { return std::sin(deg * kDegToRad); }

double decode_direction_deg(double sine_value, double anchor_deg) {
  const double s = std::clamp(sine_value, -1.0, 1.0);
  const double asin_deg = std::asin(s) / kDegToRad;  // in [-90, 90]
  const double anchor_cos = std::cos(anchor_deg * kDegToRad);
  double deg = (anchor_cos >= 0.0) ? asin_deg : 180.0 - asin_deg;
  deg = std::fmod(deg, 360.0);
  if (deg < 0.0) deg += 360.0;
  return deg;
}

StandardizedTable standardize(const FeatureTable& table) {
  const std::size_t h = table.n_steps();
  const std::size_t p = table.n_features();
  if (h < 2) throw ValidationError("standardize needs at least 2 rows, got " + std::to_string(h));

  StandardizedTable out;
  out.X.resize(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(p));
  out.mean.resize(static_cast<Eigen::Index>(p));
  out.stddev.resize(static_cast<Eigen::Index>(p));
  out.feature_ids.reserve(p);
  out.sine_encoded.reserve(p);

  for (std::size_t j = 0; j < p; ++j) {
    const auto& f = table.features()[j];
    const bool encode = feature_kind(f.id) == FeatureKind::Direction;
    out.feature_ids.push_back(f.id);
    out.sine_encoded.push_back(encode);

    Eigen::VectorXd col(static_cast<Eigen::Index>(h));
    for (std::size_t i = 0; i < h; ++i)
      col(static_cast<Eigen::Index>(i)) = encode ? encode_direction_deg(f.values[i]) : f.values[i];

    const double mu = col.mean();
    const double ss = (col.array() - mu).square().sum();
    const double sd = std::sqrt(ss / static_cast<double>(h - 1));
    if (!(sd > 1e-12 * (1.0 + std::abs(mu))))
      throw ValidationError("zero-variance feature: " + f.id);

    out.mean(static_cast<Eigen::Index>(j)) = mu;
    out.stddev(static_cast<Eigen::Index>(j)) = sd;
    out.X.col(static_cast<Eigen::Index>(j)) = (col.array() - mu) / sd;
  }
  return out;
}

}  // namespace windflex::weather
