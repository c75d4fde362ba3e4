#include "windflex/weather/kmeans.hpp"

#include <limits>
#include <set>

#include "windflex/common.hpp"
#include "windflex/weather/standardize.hpp"

namespace windflex::weather {

namespace {

int nearest_centroid(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
                     Eigen::Index row, double* dist2_out = nullptr) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < centroids.rows(); ++c) {
    const double d = (points.row(row) - centroids.row(c)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  if (dist2_out) *dist2_out = best_d;
  return best;
}

Eigen::MatrixXd kmeanspp_init(const Eigen::MatrixXd& points, std::size_t k,
                              std::mt19937_64& gen) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd centroids(static_cast<Eigen::Index>(k), points.cols());
  centroids.row(0) = points.row(static_cast<Eigen::Index>(rng::uindex(gen, static_cast<std::size_t>(n))));
  Eigen::VectorXd d2(n);
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t cc = 0; cc < c; ++cc)
        best = std::min(best, (points.row(i) - centroids.row(static_cast<Eigen::Index>(cc))).squaredNorm());
      d2(i) = best;
      total += best;
    }
    Eigen::Index chosen = 0;
    if (total > 0.0) {
      const double target = rng::u01(gen) * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2(i);
        if (acc >= target) {
          chosen = i;
          break;
        }
        chosen = i;
      }
    } else {
      chosen = static_cast<Eigen::Index>(rng::uindex(gen, static_cast<std::size_t>(n)));
    }
    centroids.row(static_cast<Eigen::Index>(c)) = points.row(chosen);
  }
  return centroids;
}

}  // namespace

ClusterAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed,
                         std::size_t max_iterations) {
  const Eigen::Index n = points.rows();
  if (k < 1) throw ValidationError("k must be >= 1");

  std::set<std::vector<double>> distinct;
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<double> row(points.cols());
    for (Eigen::Index j = 0; j < points.cols(); ++j) row[static_cast<std::size_t>(j)] = points(i, j);
    distinct.insert(std::move(row));
    if (distinct.size() >= k) break;
  }
  if (distinct.size() < k)
    throw ValidationError("k=" + std::to_string(k) + " exceeds number of distinct points");

  auto gen = rng::engine(seed, 0x6b6d65616e73ull);
  Eigen::MatrixXd centroids = kmeanspp_init(points, k, gen);

  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    std::vector<int> new_labels(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
      new_labels[static_cast<std::size_t>(i)] = nearest_centroid(points, centroids, i);

    // Re-seed any emptied cluster with the point farthest from its centroid.
    for (std::size_t c = 0; c < k; ++c) {
      if (std::find(new_labels.begin(), new_labels.end(), static_cast<int>(c)) !=
          new_labels.end())
        continue;
      Eigen::Index far = 0;
      double far_d = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto li = static_cast<Eigen::Index>(new_labels[static_cast<std::size_t>(i)]);
        const double d = (points.row(i) - centroids.row(li)).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      centroids.row(static_cast<Eigen::Index>(c)) = points.row(far);
      for (Eigen::Index i = 0; i < n; ++i)
        new_labels[static_cast<std::size_t>(i)] = nearest_centroid(points, centroids, i);
    }

    if (new_labels == labels) break;
    labels = std::move(new_labels);

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int c = labels[static_cast<std::size_t>(i)];
      sums.row(c) += points.row(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (std::size_t c = 0; c < k; ++c)
      if (counts[c] > 0)
        centroids.row(static_cast<Eigen::Index>(c)) = sums.row(static_cast<Eigen::Index>(c)) / static_cast<double>(counts[c]);
  }

  // Final pass so labels are exactly nearest-centroid for the returned centroids.
  ClusterAssignment out;
  out.k = k;
  out.centroids = centroids;
  out.labels.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double d2 = 0.0;
    out.labels[static_cast<std::size_t>(i)] = nearest_centroid(points, centroids, i, &d2);
    out.within_cluster_ss += d2;
  }
  for (std::size_t c = 0; c < k; ++c)
    if (std::find(out.labels.begin(), out.labels.end(), static_cast<int>(c)) == out.labels.end())
      throw ModelError("k-means produced an empty cluster");
  return out;
}

ClusterAssignment cluster_weather(const FeatureTable& table,
                                  const std::vector<std::string>& feature_subset,
                                  std::size_t k, std::uint64_t seed,
                                  std::size_t max_iterations) {
  const StandardizedTable std_table = standardize(table.select(feature_subset));
  return kmeans(std_table.X, k, seed, max_iterations);
}

}  // namespace windflex::weather
