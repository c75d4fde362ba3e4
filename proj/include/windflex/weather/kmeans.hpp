#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "windflex/weather/feature_table.hpp"

namespace windflex::weather {

struct ClusterAssignment {
  std::size_t k = 0;
  std::vector<int> labels;     // per timestep, in [0, k)
  Eigen::MatrixXd centroids;   // k x features, in standardized units
  double within_cluster_ss = 0.0;
};

/// Lloyd's algorithm with seeded k-means++ initialization on the
/// standardized feature subset. Deterministic given the seed; iterates to
/// an assignment fixpoint or the iteration cap.
ClusterAssignment cluster_weather(const FeatureTable& table,
                                  const std::vector<std::string>& feature_subset,
                                  std::size_t k, std::uint64_t seed,
                                  std::size_t max_iterations = 200);

/// Core k-means on raw row vectors (exposed for tests).
ClusterAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed,
                         std::size_t max_iterations = 200);

}  // namespace windflex::weather
