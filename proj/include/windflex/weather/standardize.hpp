#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "windflex/weather/feature_table.hpp"

namespace windflex::weather {

/// Columns centered to mean 0 and scaled to sample standard deviation 1.
/// Direction columns are mapped through sin(deg) before standardization;
/// the sine value is the canonical internal representation from here on.
struct StandardizedTable {
  Eigen::MatrixXd X;  // h x p, unitless
  std::vector<std::string> feature_ids;
  Eigen::VectorXd mean;           // of the (possibly encoded) column
  Eigen::VectorXd stddev;         // sample std (ddof = 1)
  std::vector<bool> sine_encoded; // per column

  std::size_t rows() const { return static_cast<std::size_t>(X.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(X.cols()); }
  int find(const std::string& feature_id) const;

  /// Inverse of the centering/scaling. Direction columns come back in their
  /// sine encoding, not degrees.
  Eigen::MatrixXd destandardize() const;
};

double encode_direction_deg(double deg);

/// Branch-consistent inverse of the sine encoding: picks the angle whose
/// cosine sign matches the anchor angle, so small perturbations stay local.
double decode_direction_deg(double sine_value, double anchor_deg);

StandardizedTable standardize(const FeatureTable& table);

}  // namespace windflex::weather
